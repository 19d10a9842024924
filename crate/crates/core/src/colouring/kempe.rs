//! Two-colour subgraphs φ(x,y) and swaps along their components.

use super::{Colour, ColouringError, EdgeColouring};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Path,
    EvenCycle,
}

/// One component of φ(x,y). For a path, `vertices` has one more entry than
/// `edges` and `edges[i]` joins `vertices[i]` and `vertices[i + 1]`. For a
/// cycle both have the same length and the last edge closes the cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KempeComponent {
    pub kind: ComponentKind,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl KempeComponent {
    pub fn ends(&self) -> Option<(usize, usize)> {
        match self.kind {
            ComponentKind::Path => Some((
                self.vertices[0],
                *self.vertices.last().expect("path has a vertex"),
            )),
            ComponentKind::EvenCycle => None,
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// φ(x,y) split into maximal alternating paths and even cycles.
#[derive(Debug, Clone)]
pub struct KempeDecomposition {
    pub colours: (Colour, Colour),
    pub components: Vec<KempeComponent>,
    source: u64,
}

impl KempeDecomposition {
    /// The path component with `v` as an end, if any.
    pub fn path_ending_at(&self, v: usize) -> Option<(usize, &KempeComponent)> {
        self.components
            .iter()
            .enumerate()
            .find(|(_, c)| c.ends().is_some_and(|(a, b)| a == v || b == v))
    }

    /// True if `u` and `v` are the two ends of one path component.
    pub fn joined_by_path(&self, u: usize, v: usize) -> Option<&KempeComponent> {
        self.path_ending_at(u).map(|(_, c)| c).filter(|c| {
            c.ends()
                .is_some_and(|(a, b)| (a == u && b == v) || (a == v && b == u))
        })
    }
}

/// Decomposes φ(x,y). Paths are listed first, by smallest end vertex then
/// walking from that end; cycles follow, each starting at the lower end of
/// its smallest edge id.
pub fn kempe_decompose(
    c: &EdgeColouring<'_>,
    x: Colour,
    y: Colour,
) -> Result<KempeDecomposition, ColouringError> {
    if x == y {
        return Err(ColouringError::SameColours(x));
    }
    let g = c.graph();
    let n = g.vertex_count();
    let mut sub: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (v, slot) in sub.iter_mut().enumerate() {
        for &(w, e) in g.incident(v) {
            let col = c.colour(e);
            if col == x || col == y {
                if slot.iter().any(|&(_, f)| c.colour(f) == col) {
                    return Err(ColouringError::NotProperOnPair {
                        vertex: v,
                        colour: col,
                    });
                }
                slot.push((w, e));
            }
        }
    }

    let mut used = vec![false; g.edge_count()];
    let mut components = Vec::new();
    let walk = |start: usize, first: (usize, usize), used: &mut Vec<bool>| {
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        let (mut cur, mut e) = (first.0, first.1);
        loop {
            used[e] = true;
            edges.push(e);
            if cur == start {
                break;
            }
            vertices.push(cur);
            match sub[cur].iter().find(|&&(_, f)| !used[f]) {
                Some(&(w, f)) => {
                    cur = w;
                    e = f;
                }
                None => break,
            }
        }
        (vertices, edges)
    };

    for v in 0..n {
        if sub[v].len() == 1 && !used[sub[v][0].1] {
            let (vertices, edges) = walk(v, sub[v][0], &mut used);
            components.push(KempeComponent {
                kind: ComponentKind::Path,
                vertices,
                edges,
            });
        }
    }
    for e in 0..g.edge_count() {
        let col = c.colour(e);
        if used[e] || (col != x && col != y) {
            continue;
        }
        let (u, w) = g.endpoints(e);
        let (vertices, edges) = walk(u, (w, e), &mut used);
        if edges.len() % 2 == 1 {
            return Err(ColouringError::ContractViolation(format!(
                "odd cycle of length {} in φ({x},{y})",
                edges.len()
            )));
        }
        components.push(KempeComponent {
            kind: ComponentKind::EvenCycle,
            vertices,
            edges,
        });
    }
    Ok(KempeDecomposition {
        colours: (x, y),
        components,
        source: c.fingerprint(),
    })
}

/// Exchanges the two colours of `d` along component `index`.
pub fn kempe_swap<'g>(
    c: &EdgeColouring<'g>,
    d: &KempeDecomposition,
    index: usize,
) -> Result<EdgeColouring<'g>, ColouringError> {
    if d.source != c.fingerprint() {
        return Err(ColouringError::StaleDecomposition);
    }
    let comp = d
        .components
        .get(index)
        .ok_or(ColouringError::ComponentOutOfRange {
            index,
            count: d.components.len(),
        })?;
    let (x, y) = d.colours;
    let mut out = c.clone();
    for &e in &comp.edges {
        let swapped = if c.colour(e) == x { y } else { x };
        out.recolour(e, swapped);
    }
    Ok(out)
}

//! Canonical labelling by individualisation and refinement.
//!
//! The ordered partition starts from the degree classes and is refined to
//! an equitable partition; a non-discrete partition is extended by
//! individualising each vertex of its first non-singleton cell. Only children
//! whose refined quotient (cell sizes plus neighbour signatures) is minimal
//! among their siblings are explored. The canonical form is the smallest
//! sorted relabelled edge list over the surviving leaves.

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

type Cells = Vec<Vec<usize>>;
type Trace = Vec<(usize, Vec<usize>)>;

/// Equal for two graphs iff they are isomorphic.
pub fn canonical_form(graph: &Graph) -> CanonicalForm {
    let n = graph.vertex_count();
    let mut by_degree: Cells = vec![Vec::new(); 4];
    for v in 0..n {
        by_degree[graph.degree(v)].push(v);
    }
    let cells: Cells = by_degree.into_iter().filter(|c| !c.is_empty()).collect();
    let (cells, _) = refine(graph, cells);
    let mut best: Option<Vec<(usize, usize)>> = None;
    search(graph, &cells, &mut best);
    CanonicalForm {
        vertex_count: n,
        edges: best.unwrap_or_default(),
    }
}

fn signature(graph: &Graph, v: usize, cell_of: &[usize]) -> Vec<usize> {
    let mut sig: Vec<usize> = graph.neighbours(v).map(|w| cell_of[w]).collect();
    sig.sort_unstable();
    sig
}

fn refine(graph: &Graph, mut cells: Cells) -> (Cells, Trace) {
    let mut cell_of = vec![0usize; graph.vertex_count()];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| (signature(graph, v, &cell_of), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            let trace = cells
                .iter()
                .map(|c| (c.len(), signature(graph, c[0], &cell_of)))
                .collect();
            return (cells, trace);
        }
        cells = next;
    }
}

fn search(graph: &Graph, cells: &Cells, best: &mut Option<Vec<(usize, usize)>>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut perm = vec![0usize; graph.vertex_count()];
        for (i, cell) in cells.iter().enumerate() {
            perm[cell[0]] = i;
        }
        let mut code: Vec<(usize, usize)> = graph
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        code.sort_unstable();
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };

    let mut children: Vec<(Trace, Cells)> = Vec::with_capacity(cells[target].len());
    for &v in &cells[target] {
        let mut split: Cells = Vec::with_capacity(cells.len() + 1);
        split.extend_from_slice(&cells[..target]);
        split.push(vec![v]);
        split.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        split.extend_from_slice(&cells[target + 1..]);
        let (refined, trace) = refine(graph, split);
        children.push((trace, refined));
    }
    let min_trace = children
        .iter()
        .map(|(t, _)| t)
        .min()
        .cloned()
        .expect("target cell is non-empty");
    for (trace, refined) in &children {
        if *trace == min_trace {
            search(graph, refined, best);
        }
    }
}

//! 2-factors of cubic graphs as complements of perfect matchings, and the
//! colouring they induce.

use crate::colouring::{Colour, EdgeColouring};
use crate::graph::{EdgeSubset, Graph};

use super::SolveError;

/// Largest order accepted by [`enumerate_two_factors`].
pub const TWO_FACTOR_ENUMERATION_LIMIT: usize = 16;

/// A spanning 2-regular subgraph split into cycles.
///
/// Each cycle starts at its lowest vertex and leaves it along the lower-id
/// cycle edge; `cycle_edges[i][j]` joins `cycles[i][j]` and
/// `cycles[i][j + 1]` (wrapping).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactor<'g> {
    graph: &'g Graph,
    pub cycles: Vec<Vec<usize>>,
    pub cycle_edges: Vec<Vec<usize>>,
    pub complement_matching: EdgeSubset,
}

impl<'g> TwoFactor<'g> {
    /// The 2-factor left after deleting a perfect matching of a cubic graph.
    pub fn from_perfect_matching(
        graph: &'g Graph,
        matching: &EdgeSubset,
    ) -> Result<Self, SolveError> {
        if !graph.is_cubic() {
            return Err(SolveError::NotCubic);
        }
        if !matching.is_matching(graph) || 2 * matching.len() != graph.vertex_count() {
            return Err(SolveError::InconsistentTwoFactor(
                "not a perfect matching".into(),
            ));
        }
        let n = graph.vertex_count();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        let mut cycle_edges = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut vertices = vec![start];
            let mut edges = Vec::new();
            visited[start] = true;
            let mut prev_edge = usize::MAX;
            let mut cur = start;
            loop {
                let e = graph
                    .incident_edges(cur)
                    .filter(|&e| !matching.contains(e) && e != prev_edge)
                    .min()
                    .expect("two cycle edges at every vertex");
                edges.push(e);
                let next = graph.other_end(e, cur);
                if next == start {
                    break;
                }
                visited[next] = true;
                vertices.push(next);
                prev_edge = e;
                cur = next;
            }
            cycles.push(vertices);
            cycle_edges.push(edges);
        }
        Ok(TwoFactor {
            graph,
            cycles,
            cycle_edges,
            complement_matching: matching.clone(),
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn odd_cycle_count(&self) -> usize {
        self.cycles.iter().filter(|c| c.len() % 2 == 1).count()
    }

    fn check_against(&self, g: &Graph) -> Result<(), SolveError> {
        let bad = |msg: &str| Err(SolveError::InconsistentTwoFactor(msg.into()));
        if !g.is_cubic() {
            return Err(SolveError::NotCubic);
        }
        if self.graph != g {
            return bad("2-factor belongs to a different graph");
        }
        let mut seen = vec![false; g.vertex_count()];
        let mut on_cycle = vec![false; g.edge_count()];
        if self.cycles.len() != self.cycle_edges.len() {
            return bad("cycle vertex and edge lists differ in number");
        }
        for (vertices, edges) in self.cycles.iter().zip(&self.cycle_edges) {
            if vertices.len() < 3 || vertices.len() != edges.len() {
                return bad("malformed cycle");
            }
            for (i, &v) in vertices.iter().enumerate() {
                if v >= g.vertex_count() || std::mem::replace(&mut seen[v], true) {
                    return bad("cycles do not partition the vertices");
                }
                let w = vertices[(i + 1) % vertices.len()];
                if w >= g.vertex_count() || g.edge_between(v, w) != Some(edges[i]) {
                    return bad("cycle edge does not join consecutive vertices");
                }
                on_cycle[edges[i]] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("some vertex lies on no cycle");
        }
        for (e, &cyc) in on_cycle.iter().enumerate() {
            if cyc == self.complement_matching.contains(e) {
                return bad("complement matching is not the set of non-cycle edges");
            }
        }
        Ok(())
    }
}

/// Perfect matching search: branch on the unmatched vertex with the fewest
/// unmatched neighbours (lowest id on ties).
fn find_perfect_matching(g: &Graph) -> Option<EdgeSubset> {
    fn go(g: &Graph, matched: &mut [bool], chosen: &mut Vec<usize>) -> bool {
        let mut best: Option<(usize, usize)> = None;
        for v in 0..g.vertex_count() {
            if matched[v] {
                continue;
            }
            let free = g.neighbours(v).filter(|&w| !matched[w]).count();
            if free == 0 {
                return false;
            }
            if best.is_none_or(|(_, f)| free < f) {
                best = Some((v, free));
            }
        }
        let Some((v, _)) = best else {
            return true;
        };
        let options: Vec<(usize, usize)> = g
            .incident(v)
            .iter()
            .copied()
            .filter(|&(w, _)| !matched[w])
            .collect();
        for (w, e) in options {
            matched[v] = true;
            matched[w] = true;
            chosen.push(e);
            if go(g, matched, chosen) {
                return true;
            }
            chosen.pop();
            matched[v] = false;
            matched[w] = false;
        }
        false
    }
    let mut matched = vec![false; g.vertex_count()];
    let mut chosen = Vec::new();
    go(g, &mut matched, &mut chosen).then(|| EdgeSubset::from_ids(g, chosen).expect("valid ids"))
}

/// Some 2-factor of a cubic graph; `None` if `g` is not cubic or has no
/// perfect matching.
pub fn find_two_factor(g: &Graph) -> Option<TwoFactor<'_>> {
    if !g.is_cubic() {
        return None;
    }
    let matching = find_perfect_matching(g)?;
    Some(TwoFactor::from_perfect_matching(g, &matching).expect("perfect matching of a cubic graph"))
}

/// Every 2-factor of a cubic graph, one per perfect matching.
pub fn enumerate_two_factors(g: &Graph) -> Result<Vec<TwoFactor<'_>>, SolveError> {
    if !g.is_cubic() {
        return Err(SolveError::NotCubic);
    }
    if g.vertex_count() > TWO_FACTOR_ENUMERATION_LIMIT {
        return Err(SolveError::TooLarge {
            order: g.vertex_count(),
            limit: TWO_FACTOR_ENUMERATION_LIMIT,
        });
    }
    fn go(g: &Graph, matched: &mut [bool], chosen: &mut Vec<usize>, out: &mut Vec<EdgeSubset>) {
        let Some(v) = (0..g.vertex_count()).find(|&v| !matched[v]) else {
            out.push(EdgeSubset::from_ids(g, chosen.iter().copied()).expect("valid ids"));
            return;
        };
        matched[v] = true;
        let mut options: Vec<(usize, usize)> = g
            .incident(v)
            .iter()
            .copied()
            .filter(|&(w, _)| !matched[w])
            .collect();
        options.sort_unstable();
        for (w, e) in options {
            matched[w] = true;
            chosen.push(e);
            go(g, matched, chosen, out);
            chosen.pop();
            matched[w] = false;
        }
        matched[v] = false;
    }
    let mut matchings = Vec::new();
    go(
        g,
        &mut vec![false; g.vertex_count()],
        &mut Vec::new(),
        &mut matchings,
    );
    matchings
        .iter()
        .map(|m| TwoFactor::from_perfect_matching(g, m))
        .collect()
}

/// Colours each cycle of `f` alternately α, β starting at its lowest vertex
/// along the lower-id cycle edge, puts δ on the closing edge of every odd
/// cycle and γ on the matching.
pub fn lemma1_colouring<'g>(
    g: &'g Graph,
    f: &TwoFactor<'_>,
) -> Result<EdgeColouring<'g>, SolveError> {
    f.check_against(g)?;
    let mut colours = vec![Colour::Gamma; g.edge_count()];
    for (vertices, edges) in f.cycles.iter().zip(&f.cycle_edges) {
        let len = edges.len();
        let (low, _) = vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| v)
            .expect("non-empty cycle");
        let leaving = edges[low];
        let entering = edges[(low + len - 1) % len];
        // walk the cycle from `low`, forward if the edge leaving it has the lower id
        let order: Vec<usize> = if leaving < entering {
            (0..len).map(|i| edges[(low + i) % len]).collect()
        } else {
            (0..len).map(|i| edges[(low + len - 1 - i) % len]).collect()
        };
        for (i, &e) in order.iter().enumerate() {
            colours[e] = if len % 2 == 1 && i == len - 1 {
                Colour::Delta
            } else if i % 2 == 0 {
                Colour::Alpha
            } else {
                Colour::Beta
            };
        }
    }
    Ok(EdgeColouring::new(g, colours).expect("one colour per edge"))
}

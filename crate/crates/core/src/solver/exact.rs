use crate::colouring::{Colour, EdgeColouring};
use crate::graph::Graph;

use super::colourable::three_colour_without;
use super::{Method, SolveResult};

/// The colour number with a δ-minimum witness, computed per connected
/// component and summed.
///
/// Matchings are tried by increasing size and, within a size, in
/// lexicographic order of edge ids. Edges with an end of degree at most one,
/// or with both ends of degree two, are never put in the matching: such an
/// edge sees at most two other colours, so a δ-minimum colouring never
/// gives it δ.
pub fn solve_exact(g: &Graph) -> SolveResult<'_> {
    let mut colours = vec![Colour::Delta; g.edge_count()];
    let mut total = 0;
    for part in g.component_subgraphs() {
        let (size, local) = min_deletion(&part.graph, true);
        total += size;
        for (i, c) in local.into_iter().enumerate() {
            colours[part.edge_map[i]] = c;
        }
    }
    let witness = EdgeColouring::new(g, colours).expect("one colour per edge");
    debug_assert!(witness.is_proper());
    SolveResult {
        s_value: total,
        witness,
        method: Method::Exact,
    }
}

/// Minimum number of edges, not necessarily a matching, whose deletion
/// leaves a 3-edge-colourable graph.
pub fn resistance_exact(g: &Graph) -> usize {
    g.component_subgraphs()
        .iter()
        .map(|part| min_deletion(&part.graph, false).0)
        .sum()
}

fn prunable(g: &Graph, e: usize) -> bool {
    let (u, v) = g.endpoints(e);
    let (du, dv) = (g.degree(u), g.degree(v));
    du.min(dv) <= 1 || du.max(dv) <= 2
}

/// Smallest deletion set (a matching when `matching_only`) and the colouring
/// with δ on it.
fn min_deletion(g: &Graph, matching_only: bool) -> (usize, Vec<Colour>) {
    let candidates: Vec<usize> = (0..g.edge_count())
        .filter(|&e| !matching_only || !prunable(g, e))
        .collect();
    let mut removed = vec![false; g.edge_count()];
    let mut covered = vec![false; g.vertex_count()];
    for size in 0..=candidates.len() {
        let mut search = DeletionSearch {
            g,
            candidates: &candidates,
            matching_only,
            removed: &mut removed,
            covered: &mut covered,
        };
        if let Some(colours) = search.subsets(size, 0) {
            let out = colours
                .into_iter()
                .map(|c| c.unwrap_or(Colour::Delta))
                .collect();
            return (size, out);
        }
    }
    unreachable!("deleting every edge leaves a colourable graph")
}

struct DeletionSearch<'a> {
    g: &'a Graph,
    candidates: &'a [usize],
    matching_only: bool,
    removed: &'a mut Vec<bool>,
    covered: &'a mut Vec<bool>,
}

impl DeletionSearch<'_> {
    fn subsets(&mut self, remaining: usize, from: usize) -> Option<Vec<Option<Colour>>> {
        if remaining == 0 {
            return three_colour_without(self.g, self.removed);
        }
        for i in from..self.candidates.len() {
            if self.candidates.len() - i < remaining {
                break;
            }
            let e = self.candidates[i];
            let (u, v) = self.g.endpoints(e);
            if self.matching_only && (self.covered[u] || self.covered[v]) {
                continue;
            }
            self.removed[e] = true;
            if self.matching_only {
                self.covered[u] = true;
                self.covered[v] = true;
            }
            let found = self.subsets(remaining - 1, i + 1);
            self.removed[e] = false;
            if self.matching_only {
                self.covered[u] = false;
                self.covered[v] = false;
            }
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

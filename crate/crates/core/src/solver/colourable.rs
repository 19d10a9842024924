//! Backtracking 3-edge-colouring.

use crate::colouring::{Colour, EdgeColouring};
use crate::graph::Graph;

/// A proper colouring with α, β, γ only, if one exists.
///
/// Edges are coloured most-constrained first (fewest colours left, then
/// lowest id) with forward checking. A colour new to the partial solution
/// is only ever tried in its lowest unused form, which breaks the colour
/// permutation symmetry without losing solutions.
pub fn is_3_edge_colourable(g: &Graph) -> Option<EdgeColouring<'_>> {
    let removed = vec![false; g.edge_count()];
    let colours = three_colour_without(g, &removed)?;
    let colours = colours
        .into_iter()
        .map(|c| c.expect("all edges kept"))
        .collect();
    Some(EdgeColouring::new(g, colours).expect("one colour per edge"))
}

/// 3-colours the edges not flagged in `removed`; removed edges get `None`.
pub(crate) fn three_colour_without(g: &Graph, removed: &[bool]) -> Option<Vec<Option<Colour>>> {
    let m = g.edge_count();
    let neighbours: Vec<Vec<usize>> = (0..m)
        .map(|e| g.adjacent_edges(e).filter(|&f| !removed[f]).collect())
        .collect();
    let mut search = Search {
        neighbours,
        colour: vec![NONE; m],
        pending: (0..m).filter(|&e| !removed[e]).count(),
        removed,
    };
    if !search.run(0) {
        return None;
    }
    Some(
        search
            .colour
            .iter()
            .map(|&c| (c != NONE).then(|| Colour::BASE[c as usize]))
            .collect(),
    )
}

const NONE: u8 = u8::MAX;

struct Search<'a> {
    neighbours: Vec<Vec<usize>>,
    colour: Vec<u8>,
    pending: usize,
    removed: &'a [bool],
}

impl Search<'_> {
    fn options(&self, e: usize) -> u8 {
        let mut mask = 0b111u8;
        for &f in &self.neighbours[e] {
            if self.colour[f] != NONE {
                mask &= !(1 << self.colour[f]);
            }
        }
        mask
    }

    fn run(&mut self, used: u8) -> bool {
        if self.pending == 0 {
            return true;
        }
        let limit = (1u8 << (used + 1).min(3)) - 1;
        let mut best: Option<(usize, u8)> = None;
        for e in 0..self.colour.len() {
            if self.removed[e] || self.colour[e] != NONE {
                continue;
            }
            let opts = self.options(e) & limit;
            if opts == 0 {
                return false;
            }
            if best.is_none_or(|(_, b)| opts.count_ones() < b.count_ones()) {
                best = Some((e, opts));
                if opts.count_ones() == 1 {
                    break;
                }
            }
        }
        let (e, opts) = best.expect("pending edge exists");
        self.pending -= 1;
        for c in 0..3u8 {
            if opts & (1 << c) == 0 {
                continue;
            }
            self.colour[e] = c;
            if self.run(used.max(c + 1)) {
                return true;
            }
        }
        self.colour[e] = NONE;
        self.pending += 1;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::ColouringClass;
    use crate::graph::{make_named, NamedGraph};

    #[test]
    fn class_one_examples() {
        for name in [
            NamedGraph::K4,
            NamedGraph::K33,
            NamedGraph::CycleN(5),
            NamedGraph::CycleN(6),
        ] {
            let g = make_named(name).unwrap();
            let c =
                is_3_edge_colourable(&g).unwrap_or_else(|| panic!("{name} is 3-edge-colourable"));
            assert_eq!(c.classify(), ColouringClass::Proper);
            assert_eq!(c.delta_count(), 0);
        }
    }

    #[test]
    fn petersen_is_class_two() {
        let p = make_named(NamedGraph::Petersen).unwrap();
        assert!(is_3_edge_colourable(&p).is_none());
    }

    #[test]
    fn removed_edges_are_uncoloured() {
        let p = make_named(NamedGraph::Petersen).unwrap();
        let witness = crate::solver::solve_exact(&p).witness;
        let removed: Vec<bool> = witness
            .colours()
            .iter()
            .map(|&c| c == Colour::Delta)
            .collect();
        let colours =
            three_colour_without(&p, &removed).expect("complement of a δ-minimum δ class");
        for (e, c) in colours.iter().enumerate() {
            assert_eq!(c.is_none(), removed[e]);
        }
        assert_eq!(colours.iter().filter(|c| c.is_some()).count(), 13);
        // a single edge is not enough
        let mut one = vec![false; 15];
        one[0] = true;
        assert!(three_colour_without(&p, &one).is_none());
    }
}

//! Kempe-move local search for an upper bound on `s(G)`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colouring::{kempe_decompose, kempe_swap, properize, Colour, EdgeColouring};
use crate::graph::Graph;

use super::{Method, SolveError, SolveResult};

/// Greedy random colouring followed by [`descend_from`]. Deterministic in
/// `seed`.
pub fn heuristic_descent(g: &Graph, seed: u64, max_rounds: usize) -> SolveResult<'_> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.shuffle(&mut rng);
    let mut start = EdgeColouring::uniform(g, Colour::Delta);
    for e in order {
        let (u, v) = g.endpoints(e);
        let free: Vec<Colour> = Colour::BASE
            .into_iter()
            .filter(|&x| !start.present_at(u, x, Some(e)) && !start.present_at(v, x, Some(e)))
            .collect();
        if let Some(&x) = free.choose(&mut rng) {
            start.recolour(e, x);
        }
    }
    descend_from(start, Method::HeuristicUpperBound, rng.gen(), max_rounds)
        .expect("greedy colourings are δ-improper")
}

/// Improves `start` by local moves and returns the best proper colouring
/// seen, labelled with `method`.
///
/// A δ-improper start is made proper first. Each round tries, for every δ
/// edge `uv` in random order, a base colour missing at both ends, then a
/// swap of the φ(a,b)-path at `u` where `a` is missing at `u` and `b` at
/// `v`, after which `uv` takes `b`. A round with no improvement applies a
/// random Kempe swap that does not increase the δ count.
pub fn descend_from<'g>(
    start: EdgeColouring<'g>,
    method: Method,
    seed: u64,
    rounds: usize,
) -> Result<SolveResult<'g>, SolveError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = properize(&start)?;
    let mut best = current.clone();
    for _ in 0..rounds {
        if best.delta_count() == 0 {
            break;
        }
        if !improve(&mut current, &mut rng) {
            perturb(&mut current, &mut rng);
        }
        if current.delta_count() < best.delta_count() {
            best = current.clone();
        }
    }
    debug_assert!(best.is_proper());
    Ok(SolveResult {
        s_value: best.delta_count(),
        witness: best,
        method,
    })
}

fn improve(c: &mut EdgeColouring<'_>, rng: &mut ChaCha8Rng) -> bool {
    let g = c.graph();
    let mut deltas: Vec<usize> = c.colour_class(Colour::Delta).iter().collect();
    deltas.shuffle(rng);
    for e in deltas {
        let (u, v) = g.endpoints(e);
        let at_u = c.missing_base_colours(u, Some(e));
        let at_v = c.missing_base_colours(v, Some(e));
        if let Some(&x) = at_u.iter().find(|x| at_v.contains(x)) {
            c.recolour(e, x);
            return true;
        }
        for &a in &at_u {
            for &b in &at_v {
                // a is missing at u and b at v, and no colour is missing at
                // both, so u ends a φ(a,b)-path; if it does not end at v the
                // swap frees b at u without touching v
                let d = kempe_decompose(c, a, b).expect("proper colourings decompose");
                let Some((index, path)) = d.path_ending_at(u) else {
                    continue;
                };
                if path.ends().is_some_and(|(p, q)| p == v || q == v) {
                    continue;
                }
                *c = kempe_swap(c, &d, index).expect("fresh decomposition");
                c.recolour(e, b);
                return true;
            }
        }
    }
    false
}

fn perturb(c: &mut EdgeColouring<'_>, rng: &mut ChaCha8Rng) {
    let x = *Colour::BASE.choose(rng).expect("three base colours");
    let y = *Colour::ALL
        .iter()
        .filter(|&&y| y != x)
        .collect::<Vec<_>>()
        .choose(rng)
        .expect("three other colours");
    let d = kempe_decompose(c, x, *y).expect("proper colourings decompose");
    if d.components.is_empty() {
        return;
    }
    let index = rng.gen_range(0..d.components.len());
    let swapped = kempe_swap(c, &d, index).expect("fresh decomposition");
    if swapped.delta_count() <= c.delta_count() {
        *c = swapped;
    }
}

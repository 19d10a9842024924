//! Reduction of a δ-improper colouring to a proper one without adding δ edges.

use super::kempe::{kempe_decompose, kempe_swap};
use super::{Colour, ColouringError, EdgeColouring};

/// Returns a proper colouring whose δ edges are a subset of those of `c`.
///
/// Each round takes the lowest vertex `u` carrying two δ edges `uv`, `uw`
/// (lowest edge ids first) and removes one δ edge:
/// - if `d(u) = 2` or all three edges at `u` are δ, `uv` takes the first
///   base colour missing at `v`;
/// - otherwise, with `uz` coloured `a`, `uv` or `uw` takes a colour other
///   than `a` missing at its far end when there is one;
/// - otherwise both `v` and `w` see the two other base colours. With `b` the
///   first of them, the φ(a,b)-path ending at `u` is swapped; its far end is
///   not `w` (else not `v`), and that edge then takes `a`.
///
/// Every round strictly shrinks the δ class.
pub fn properize<'g>(c: &EdgeColouring<'g>) -> Result<EdgeColouring<'g>, ColouringError> {
    c.check_delta_improper()?;
    let mut current = c.clone();
    loop {
        let before = current.colour_class(Colour::Delta);
        if !reduce_once(&mut current)? {
            return Ok(current);
        }
        let after = current.colour_class(Colour::Delta);
        if !(after.is_subset(&before) && after.len() < before.len()) {
            return Err(ColouringError::ContractViolation(
                "reduction round did not shrink the δ class".into(),
            ));
        }
    }
}

/// One reduction round; `false` when the colouring is already proper.
fn reduce_once(c: &mut EdgeColouring<'_>) -> Result<bool, ColouringError> {
    let g = c.graph();
    let clash = (0..g.vertex_count()).find_map(|u| {
        let mut deltas: Vec<usize> = g
            .incident_edges(u)
            .filter(|&e| c.colour(e) == Colour::Delta)
            .collect();
        (deltas.len() >= 2).then(|| {
            deltas.sort_unstable();
            (u, deltas)
        })
    });
    let Some((u, deltas)) = clash else {
        return Ok(false);
    };
    let (uv, uw) = (deltas[0], deltas[1]);
    let (v, w) = (g.other_end(uv, u), g.other_end(uw, u));

    if g.degree(u) == 2 || deltas.len() == 3 {
        let x = first_missing(c, v, uv)?;
        c.recolour(uv, x);
        return Ok(true);
    }

    let uz = g
        .incident_edges(u)
        .find(|&e| c.colour(e) != Colour::Delta)
        .expect("degree-3 vertex with exactly two δ edges");
    let a = c.colour(uz);
    for (edge, far) in [(uv, v), (uw, w)] {
        if let Some(x) = c
            .missing_base_colours(far, Some(edge))
            .into_iter()
            .find(|&x| x != a)
        {
            c.recolour(edge, x);
            return Ok(true);
        }
    }

    let b = Colour::BASE
        .into_iter()
        .find(|&x| x != a)
        .expect("two base colours remain");
    let d = kempe_decompose(c, a, b)?;
    let (index, path) = d.path_ending_at(u).ok_or_else(|| {
        ColouringError::ContractViolation(format!("no φ({a},{b}) path ends at vertex {u}"))
    })?;
    let (p, q) = path.ends().expect("path component");
    let far = if p == u { q } else { p };
    let target = if far != w { uw } else { uv };
    *c = kempe_swap(c, &d, index)?;
    c.recolour(target, a);
    Ok(true)
}

fn first_missing(c: &EdgeColouring<'_>, v: usize, edge: usize) -> Result<Colour, ColouringError> {
    c.missing_base_colours(v, Some(edge))
        .into_iter()
        .next()
        .ok_or_else(|| {
            ColouringError::ContractViolation(format!("vertex {v} sees all base colours"))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::ColouringClass;
    use crate::graph::{make_named, Graph, NamedGraph};
    use Colour::*;

    #[test]
    fn proper_input_unchanged() {
        let k4 = make_named(NamedGraph::K4).unwrap();
        let c = EdgeColouring::new(&k4, vec![Alpha, Beta, Gamma, Gamma, Beta, Alpha]).unwrap();
        assert_eq!(properize(&c).unwrap(), c);
    }

    #[test]
    fn degree_two_clash() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let c = EdgeColouring::uniform(&p3, Delta);
        let out = properize(&c).unwrap();
        assert_eq!(out.classify(), ColouringClass::Proper);
        assert!(out.delta_count() <= 1);
        assert!(out.colour_class(Delta).is_subset(&c.colour_class(Delta)));
    }

    #[test]
    fn triple_delta_star() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = EdgeColouring::uniform(&star, Delta);
        let out = properize(&c).unwrap();
        assert!(out.is_proper());
        assert!(out.delta_count() <= 2);
    }

    #[test]
    fn path_swap_case() {
        // u = 0 with uz = 01 (α), uv = 02 (δ), uw = 03 (δ); v and w see β
        // and γ, and the φ(α,β) path from u runs 0-1-4.
        let g = Graph::new(
            8,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (2, 5),
                (2, 6),
                (3, 7),
                (3, 4),
                (1, 4),
            ],
        )
        .unwrap();
        let c = EdgeColouring::new(
            &g,
            vec![Alpha, Delta, Delta, Beta, Gamma, Beta, Gamma, Beta],
        )
        .unwrap();
        assert_eq!(c.classify(), ColouringClass::DeltaImproper);
        let out = properize(&c).unwrap();
        assert!(out.is_proper());
        assert_eq!(out.delta_count(), 1);
        assert!(out.colour_class(Delta).is_subset(&c.colour_class(Delta)));
    }

    #[test]
    fn invalid_rejected() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let c = EdgeColouring::uniform(&p3, Alpha);
        assert_eq!(properize(&c), Err(ColouringError::Invalid(0, 1, Alpha)));
    }
}

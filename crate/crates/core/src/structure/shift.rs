use crate::colouring::{Colour, EdgeColouring};

use super::{DeltaClass, DeltaClassification, StructureError};

/// Moves δ from `e` to `target` along the class-`class` cycle of `e`.
///
/// δ is exchanged with the next cycle edge one step at a time, walking
/// forward from `e`; every intermediate colouring must stay proper. Only
/// cycle edges change colour.
pub fn shift_delta<'g>(
    c: &EdgeColouring<'g>,
    cl: &DeltaClassification<'_>,
    e: usize,
    class: DeltaClass,
    target: usize,
) -> Result<EdgeColouring<'g>, StructureError> {
    if cl.colouring().fingerprint() != c.fingerprint() {
        return Err(StructureError::StaleClassification);
    }
    let cycle = cl
        .cycle(e, class)
        .ok_or(StructureError::NotMember { edge: e, class })?;
    let to = cycle
        .edges
        .iter()
        .position(|&f| f == target)
        .ok_or(StructureError::TargetNotOnCycle(target))?;
    move_delta(c, &cycle.edges, cycle.edges.len() - 1, to)
}

/// Walks δ forward around the closed edge sequence `cycle` from position
/// `from` to position `to`.
fn move_delta<'g>(
    c: &EdgeColouring<'g>,
    cycle: &[usize],
    from: usize,
    to: usize,
) -> Result<EdgeColouring<'g>, StructureError> {
    debug_assert_eq!(c.colour(cycle[from]), Colour::Delta);
    let g = c.graph();
    let mut out = c.clone();
    let len = cycle.len();
    let mut at = from;
    while at != to {
        let next = (at + 1) % len;
        let moved = out.colour(cycle[next]);
        out.recolour(cycle[at], moved);
        out.recolour(cycle[next], Colour::Delta);
        // only the ends of the two recoloured edges can carry a new clash
        let (a, b) = g.endpoints(cycle[at]);
        let (x, y) = g.endpoints(cycle[next]);
        let clash_free = [a, b, x, y].into_iter().all(|w| {
            let mut seen = [false; 4];
            g.incident_edges(w)
                .all(|f| !std::mem::replace(&mut seen[out.colour(f).index()], true))
        });
        if !clash_free {
            return Err(StructureError::ShiftBrokeProperness(cycle[next]));
        }
        at = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, NamedGraph};
    use crate::solver::solve_exact;
    use crate::structure::classify_delta_edges;

    #[test]
    fn identity_shift() {
        let p = make_named(NamedGraph::Petersen).unwrap();
        let r = solve_exact(&p);
        let cl = classify_delta_edges(&r.witness).unwrap();
        let (&e, classes) = cl.memberships.iter().next().unwrap();
        let out = shift_delta(&r.witness, &cl, e, classes[0], e).unwrap();
        assert_eq!(out, r.witness);
    }

    #[test]
    fn one_step_shift_only_touches_cycle() {
        let p = make_named(NamedGraph::Petersen).unwrap();
        let r = solve_exact(&p);
        let cl = classify_delta_edges(&r.witness).unwrap();
        let (&e, classes) = cl.memberships.iter().next().unwrap();
        let cycle = cl.cycle(e, classes[0]).unwrap();
        let target = cycle.edges[0];
        let out = shift_delta(&r.witness, &cl, e, classes[0], target).unwrap();
        assert!(out.is_proper());
        assert_eq!(out.delta_count(), 2);
        assert_eq!(out.colour(target), Colour::Delta);
        for f in 0..p.edge_count() {
            if !cycle.edges.contains(&f) {
                assert_eq!(out.colour(f), r.witness.colour(f));
            }
        }
    }

    #[test]
    fn errors() {
        let p = make_named(NamedGraph::Petersen).unwrap();
        let r = solve_exact(&p);
        let cl = classify_delta_edges(&r.witness).unwrap();
        let (&e, classes) = cl.memberships.iter().next().unwrap();
        let cycle = cl.cycle(e, classes[0]).unwrap();
        let off = (0..15).find(|f| !cycle.edges.contains(f)).unwrap();
        assert_eq!(
            shift_delta(&r.witness, &cl, e, classes[0], off).unwrap_err(),
            StructureError::TargetNotOnCycle(off)
        );
        let other = DeltaClass::ALL
            .into_iter()
            .find(|c| !classes.contains(c))
            .unwrap();
        assert!(matches!(
            shift_delta(&r.witness, &cl, e, other, e),
            Err(StructureError::NotMember { .. })
        ));
        let mut changed = r.witness.clone();
        changed.recolour(off, Colour::Delta);
        assert_eq!(
            shift_delta(&changed, &cl, e, classes[0], e).unwrap_err(),
            StructureError::StaleClassification
        );
    }
}

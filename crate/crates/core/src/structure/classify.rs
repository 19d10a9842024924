use std::collections::BTreeMap;

use crate::colouring::{kempe_decompose, Colour, EdgeColouring, KempeDecomposition};

use super::{DeltaClass, StructureError};

/// An odd cycle made of one δ edge and an even alternating path.
///
/// `edges[i]` joins `vertices[i]` and `vertices[(i + 1) % len]`; the δ edge
/// is last, so `vertices[0]` and the last vertex are its ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedCycle {
    pub class: DeltaClass,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl AssociatedCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn delta_edge(&self) -> usize {
        *self.edges.last().expect("cycle has edges")
    }
}

/// Classes and associated cycles of the δ edges of a proper colouring.
#[derive(Debug, Clone)]
pub struct DeltaClassification<'g> {
    colouring: EdgeColouring<'g>,
    /// Classes of each δ edge, in order A, B, C. Empty for a δ edge with no
    /// joining even path, which only happens off δ-minimum colourings.
    pub memberships: BTreeMap<usize, Vec<DeltaClass>>,
    pub cycles: BTreeMap<(usize, DeltaClass), AssociatedCycle>,
}

impl<'g> DeltaClassification<'g> {
    pub fn colouring(&self) -> &EdgeColouring<'g> {
        &self.colouring
    }

    pub fn classes_of(&self, e: usize) -> &[DeltaClass] {
        self.memberships.get(&e).map_or(&[], Vec::as_slice)
    }

    pub fn cycle(&self, e: usize, class: DeltaClass) -> Option<&AssociatedCycle> {
        self.cycles.get(&(e, class))
    }

    /// Number of δ edges in `class`; an edge in two classes counts in both.
    pub fn count(&self, class: DeltaClass) -> usize {
        self.memberships
            .values()
            .filter(|cl| cl.contains(&class))
            .count()
    }

    pub fn delta_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.memberships.keys().copied()
    }

    pub fn unclassified(&self) -> Vec<usize> {
        self.memberships
            .iter()
            .filter(|(_, cl)| cl.is_empty())
            .map(|(&e, _)| e)
            .collect()
    }
}

/// Tests classes A, B, C in that order for every δ edge and records each
/// class whose two-colour subgraph joins the ends of the edge by a path of
/// even length. Fails on improper colourings and on δ edges with no such
/// path.
pub fn classify_delta_edges<'g>(
    c: &EdgeColouring<'g>,
) -> Result<DeltaClassification<'g>, StructureError> {
    let cl = classify_lenient(c)?;
    if let Some(&e) = cl.unclassified().first() {
        return Err(StructureError::Unclassified(e));
    }
    Ok(cl)
}

/// Like [`classify_delta_edges`] but keeps unclassified edges with empty
/// membership.
pub(crate) fn classify_lenient<'g>(
    c: &EdgeColouring<'g>,
) -> Result<DeltaClassification<'g>, StructureError> {
    if !c.is_proper() {
        return Err(StructureError::NotProper);
    }
    let g = c.graph();
    let decompositions: Vec<(DeltaClass, KempeDecomposition)> = DeltaClass::ALL
        .into_iter()
        .map(|class| {
            let (x, y) = class.colours();
            let d = kempe_decompose(c, x, y).expect("proper colourings decompose");
            (class, d)
        })
        .collect();

    let mut memberships = BTreeMap::new();
    let mut cycles = BTreeMap::new();
    for e in c.colour_class(Colour::Delta).iter() {
        let (u, v) = g.endpoints(e);
        let mut classes = Vec::new();
        for (class, d) in &decompositions {
            let Some(path) = d.joined_by_path(u, v) else {
                continue;
            };
            if path.len() % 2 == 1 {
                continue;
            }
            let (mut vertices, mut edges) = (path.vertices.clone(), path.edges.clone());
            if vertices[0] != u {
                vertices.reverse();
                edges.reverse();
            }
            edges.push(e);
            classes.push(*class);
            cycles.insert(
                (e, *class),
                AssociatedCycle {
                    class: *class,
                    vertices,
                    edges,
                },
            );
        }
        memberships.insert(e, classes);
    }
    Ok(DeltaClassification {
        colouring: c.clone(),
        memberships,
        cycles,
    })
}

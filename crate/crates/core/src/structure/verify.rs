//! Clause-by-clause check of the structure every δ-minimum colouring has.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::colouring::{Colour, EdgeColouring};
use crate::graph::Graph;

use super::classify::classify_lenient;
use super::{DeltaClass, DeltaClassification, StructureError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClauseId {
    Proper,
    DeltaIncidence,
    DegreePattern,
    ClassificationTotal,
    CycleOddness,
    ExternalEdgeColour,
    NoConsecutiveDegree2,
    CyclesDisjoint,
    ParityCongruence,
    PairInteraction,
    TripleInteraction,
    StrongMatchingFlag,
    DeltaCount,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Witness {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub id: ClauseId,
    pub pass: bool,
    pub witness: Option<Witness>,
    /// Only set for informational clauses.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub info: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ClassCounts {
    #[serde(rename = "A")]
    pub a: usize,
    #[serde(rename = "B")]
    pub b: usize,
    #[serde(rename = "C")]
    pub c: usize,
}

/// JSON form: `{"clauses":[{"id":..,"pass":..,"witness":..}, ..], "s":..,
/// "counts":{"A":..,"B":..,"C":..}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub clauses: Vec<Clause>,
    pub s: usize,
    pub counts: ClassCounts,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.pass)
    }

    pub fn clause(&self, id: ClauseId) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// `(|A|, |B|, |C|)` and whether they agree with `|E(δ)|` modulo 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParitySignature {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub parity_ok: bool,
}

/// Class sizes of a classification of a cubic graph. In a cubic graph each
/// δ edge of a δ-minimum colouring lies in exactly one class; a double
/// membership is reported as an error rather than counted.
pub fn parity_signature(cl: &DeltaClassification<'_>) -> Result<ParitySignature, StructureError> {
    let g = cl.colouring().graph();
    if !g.is_cubic() {
        return Err(StructureError::NotCubic);
    }
    if let Some((&e, _)) = cl.memberships.iter().find(|(_, c)| c.len() > 1) {
        return Err(StructureError::DoubleMembership(e));
    }
    let (a, b, c) = (
        cl.count(DeltaClass::A),
        cl.count(DeltaClass::B),
        cl.count(DeltaClass::C),
    );
    let s = cl.memberships.len();
    Ok(ParitySignature {
        a,
        b,
        c,
        parity_ok: a % 2 == b % 2 && b % 2 == c % 2 && c % 2 == s % 2,
    })
}

fn pass(id: ClauseId) -> Clause {
    Clause {
        id,
        pass: true,
        witness: None,
        info: None,
    }
}

fn fail(
    id: ClauseId,
    edges: Vec<usize>,
    vertices: Vec<usize>,
    detail: impl Into<String>,
) -> Clause {
    Clause {
        id,
        pass: false,
        witness: Some(Witness {
            edges,
            vertices,
            detail: detail.into(),
        }),
        info: None,
    }
}

const STRUCTURAL: [ClauseId; 11] = [
    ClauseId::DeltaIncidence,
    ClauseId::DegreePattern,
    ClauseId::ClassificationTotal,
    ClauseId::CycleOddness,
    ClauseId::ExternalEdgeColour,
    ClauseId::NoConsecutiveDegree2,
    ClauseId::CyclesDisjoint,
    ClauseId::ParityCongruence,
    ClauseId::PairInteraction,
    ClauseId::TripleInteraction,
    ClauseId::StrongMatchingFlag,
];

/// Evaluates every structural clause against `c`. Failures become report
/// entries with a witness; nothing here returns an error.
///
/// `s_known`, when given, is used as `s(G)` in the parity clause and adds a
/// `delta_count` clause comparing it with the number of δ edges.
pub fn verify_theorem1(c: &EdgeColouring<'_>, s_known: Option<usize>) -> VerificationReport {
    let g = c.graph();
    let delta = c.colour_class(Colour::Delta);
    let s = s_known.unwrap_or(delta.len());

    let Ok(cl) = classify_lenient(c) else {
        let (e, f) = first_adjacent_equal(c).expect("improper colouring has a clash");
        let mut clauses = vec![fail(
            ClauseId::Proper,
            vec![e, f],
            vec![],
            "adjacent edges share a colour",
        )];
        clauses.extend(
            STRUCTURAL
                .into_iter()
                .map(|id| fail(id, vec![], vec![], "not evaluated: colouring is not proper")),
        );
        if s_known.is_some() {
            clauses.push(fail(
                ClauseId::DeltaCount,
                vec![],
                vec![],
                "not evaluated: colouring is not proper",
            ));
        }
        return VerificationReport {
            clauses,
            s,
            counts: ClassCounts::default(),
        };
    };

    let deltas: Vec<usize> = delta.iter().collect();
    let mut clauses = vec![
        pass(ClauseId::Proper),
        delta_incidence(c, &deltas),
        degree_pattern(g, &deltas),
        classification_total(g, &cl, &deltas),
        cycle_oddness(c, &cl),
        external_edge_colour(c, &cl),
        no_consecutive_degree2(g, &cl),
        cycles_disjoint(&cl),
        parity_congruence(g, &cl, s),
        pair_interaction(g, &cl, &deltas),
        triple_interaction(g, &cl, &deltas),
        Clause {
            info: Some(delta.is_strong_matching(g)),
            ..pass(ClauseId::StrongMatchingFlag)
        },
    ];
    if let Some(known) = s_known {
        clauses.push(if known == deltas.len() {
            pass(ClauseId::DeltaCount)
        } else {
            fail(
                ClauseId::DeltaCount,
                deltas.clone(),
                vec![],
                format!("{} δ edges, expected {known}", deltas.len()),
            )
        });
    }
    VerificationReport {
        clauses,
        s,
        counts: ClassCounts {
            a: cl.count(DeltaClass::A),
            b: cl.count(DeltaClass::B),
            c: cl.count(DeltaClass::C),
        },
    }
}

fn first_adjacent_equal(c: &EdgeColouring<'_>) -> Option<(usize, usize)> {
    let g = c.graph();
    (0..g.edge_count()).find_map(|e| {
        g.adjacent_edges(e)
            .find(|&f| f > e && c.colour(f) == c.colour(e))
            .map(|f| (e, f))
    })
}

fn delta_incidence(c: &EdgeColouring<'_>, deltas: &[usize]) -> Clause {
    let bad: Vec<usize> = deltas
        .iter()
        .copied()
        .filter(|&e| {
            let seen = c.colours_around(e);
            !Colour::BASE.iter().all(|x| seen[x.index()])
        })
        .collect();
    if bad.is_empty() {
        pass(ClauseId::DeltaIncidence)
    } else {
        fail(
            ClauseId::DeltaIncidence,
            bad,
            vec![],
            "δ edge misses one of α, β, γ",
        )
    }
}

fn degree_pattern(g: &Graph, deltas: &[usize]) -> Clause {
    let mut bad_edges = Vec::new();
    let mut bad_vertices = Vec::new();
    for &e in deltas {
        let (u, v) = g.endpoints(e);
        let (du, dv) = (g.degree(u), g.degree(v));
        let ok = matches!((du.min(dv), du.max(dv)), (2, 3) | (3, 3));
        if !ok {
            bad_edges.push(e);
            continue;
        }
        // a degree-2 end must be the only degree-2 neighbour of the other end
        for (low, high) in [(v, u), (u, v)] {
            if g.degree(low) == 2 {
                let others: Vec<usize> = g
                    .neighbours(high)
                    .filter(|&w| w != low && g.degree(w) == 2)
                    .collect();
                if !others.is_empty() {
                    bad_edges.push(e);
                    bad_vertices.extend(others);
                }
            }
        }
    }
    if bad_edges.is_empty() {
        pass(ClauseId::DegreePattern)
    } else {
        fail(
            ClauseId::DegreePattern,
            bad_edges,
            bad_vertices,
            "δ edge end degrees are not (3,3) or (2,3) with a unique degree-2 neighbour",
        )
    }
}

fn classification_total(g: &Graph, cl: &DeltaClassification<'_>, deltas: &[usize]) -> Clause {
    let bad: Vec<usize> = deltas
        .iter()
        .copied()
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            let k = cl.classes_of(e).len();
            match (g.degree(u).min(g.degree(v)), g.degree(u).max(g.degree(v))) {
                (3, 3) => k != 1,
                (2, 3) => k != 2,
                _ => k == 0,
            }
        })
        .collect();
    if bad.is_empty() {
        pass(ClauseId::ClassificationTotal)
    } else {
        fail(
            ClauseId::ClassificationTotal,
            bad,
            vec![],
            "δ edge lies in the wrong number of classes A, B, C",
        )
    }
}

fn cycle_oddness(c: &EdgeColouring<'_>, cl: &DeltaClassification<'_>) -> Clause {
    for cycle in cl.cycles.values() {
        let (x, y) = cycle.class.colours();
        let path = &cycle.edges[..cycle.len() - 1];
        let alternating = path.iter().all(|&f| c.colour(f) == x || c.colour(f) == y)
            && path.windows(2).all(|w| c.colour(w[0]) != c.colour(w[1]));
        let one_delta = cycle
            .edges
            .iter()
            .filter(|&&f| c.colour(f) == Colour::Delta)
            .count()
            == 1;
        if cycle.len() % 2 == 0 || !alternating || !one_delta {
            return fail(
                ClauseId::CycleOddness,
                cycle.edges.clone(),
                cycle.vertices.clone(),
                format!(
                    "class {} cycle is not odd with a single δ edge",
                    cycle.class
                ),
            );
        }
    }
    pass(ClauseId::CycleOddness)
}

fn external_edge_colour(c: &EdgeColouring<'_>, cl: &DeltaClassification<'_>) -> Clause {
    let g = c.graph();
    let mut bad = BTreeSet::new();
    for cycle in cl.cycles.values() {
        let on_cycle: BTreeSet<usize> = cycle.edges.iter().copied().collect();
        for &v in &cycle.vertices {
            for f in g.incident_edges(v) {
                if !on_cycle.contains(&f) && c.colour(f) != cycle.class.external() {
                    bad.insert(f);
                }
            }
        }
    }
    if bad.is_empty() {
        pass(ClauseId::ExternalEdgeColour)
    } else {
        fail(
            ClauseId::ExternalEdgeColour,
            bad.into_iter().collect(),
            vec![],
            "edge leaving an associated cycle has the wrong colour",
        )
    }
}

fn no_consecutive_degree2(g: &Graph, cl: &DeltaClassification<'_>) -> Clause {
    for cycle in cl.cycles.values() {
        let n = cycle.vertices.len();
        for i in 0..n {
            let (a, b) = (cycle.vertices[i], cycle.vertices[(i + 1) % n]);
            if g.degree(a) == 2 && g.degree(b) == 2 {
                return fail(
                    ClauseId::NoConsecutiveDegree2,
                    vec![cycle.edges[i]],
                    vec![a, b],
                    "two consecutive degree-2 vertices on an associated cycle",
                );
            }
        }
    }
    pass(ClauseId::NoConsecutiveDegree2)
}

fn cycles_disjoint(cl: &DeltaClassification<'_>) -> Clause {
    let cycles: Vec<(usize, BTreeSet<usize>)> = cl
        .cycles
        .iter()
        .map(|(&(e, _), cyc)| (e, cyc.vertices.iter().copied().collect()))
        .collect();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if cycles[i].0 == cycles[j].0 {
                continue;
            }
            let shared: Vec<usize> = cycles[i].1.intersection(&cycles[j].1).copied().collect();
            if !shared.is_empty() {
                return fail(
                    ClauseId::CyclesDisjoint,
                    vec![cycles[i].0, cycles[j].0],
                    shared,
                    "cycles of distinct δ edges share a vertex",
                );
            }
        }
    }
    pass(ClauseId::CyclesDisjoint)
}

fn parity_congruence(g: &Graph, cl: &DeltaClassification<'_>, s: usize) -> Clause {
    if !g.is_cubic() {
        return pass(ClauseId::ParityCongruence);
    }
    let counts = [
        cl.count(DeltaClass::A),
        cl.count(DeltaClass::B),
        cl.count(DeltaClass::C),
    ];
    if counts.iter().all(|k| k % 2 == s % 2) {
        pass(ClauseId::ParityCongruence)
    } else {
        fail(
            ClauseId::ParityCongruence,
            cl.delta_edges().collect(),
            vec![],
            format!("|A|,|B|,|C| = {counts:?} not all congruent to s = {s} mod 2"),
        )
    }
}

fn ends(g: &Graph, edges: &[usize]) -> BTreeSet<usize> {
    edges
        .iter()
        .flat_map(|&e| {
            let (u, v) = g.endpoints(e);
            [u, v]
        })
        .collect()
}

fn has_degree2_end(g: &Graph, e: usize) -> bool {
    let (u, v) = g.endpoints(e);
    g.degree(u) == 2 || g.degree(v) == 2
}

fn pair_interaction(g: &Graph, cl: &DeltaClassification<'_>, deltas: &[usize]) -> Clause {
    for (i, &e1) in deltas.iter().enumerate() {
        for &e2 in &deltas[i + 1..] {
            let (c1, c2) = (cl.classes_of(e1), cl.classes_of(e2));
            if c1.is_empty() || c2.is_empty() {
                continue;
            }
            let vertices = ends(g, &[e1, e2]);
            let induced = g.induced_edge_count(&vertices);
            let share_class = c1.iter().any(|k| c2.contains(k));
            let need_2k2 = !share_class || has_degree2_end(g, e1) || has_degree2_end(g, e2);
            let ok = if need_2k2 {
                vertices.len() == 4 && induced == 2
            } else {
                vertices.len() == 4 && induced <= 3
            };
            if !ok {
                let detail = if need_2k2 {
                    "δ edges do not induce 2K2"
                } else {
                    "same-class δ edges joined by more than one edge"
                };
                return fail(
                    ClauseId::PairInteraction,
                    vec![e1, e2],
                    vertices.into_iter().collect(),
                    detail,
                );
            }
        }
    }
    pass(ClauseId::PairInteraction)
}

fn triple_interaction(g: &Graph, cl: &DeltaClassification<'_>, deltas: &[usize]) -> Clause {
    for class in DeltaClass::ALL {
        let members: Vec<usize> = deltas
            .iter()
            .copied()
            .filter(|&e| cl.classes_of(e).contains(&class))
            .collect();
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                for k in j + 1..members.len() {
                    let triple = [members[i], members[j], members[k]];
                    let vertices = ends(g, &triple);
                    if g.induced_edge_count(&vertices) > 4 {
                        return fail(
                            ClauseId::TripleInteraction,
                            triple.to_vec(),
                            vertices.into_iter().collect(),
                            format!("three class {class} δ edges induce more than 4 edges"),
                        );
                    }
                }
            }
        }
    }
    pass(ClauseId::TripleInteraction)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, NamedGraph};
    use crate::solver::{is_3_edge_colourable, solve_exact};
    use crate::structure::classify_delta_edges;

    #[test]
    fn three_colouring_passes_vacuously() {
        let k33 = make_named(NamedGraph::K33).unwrap();
        let c = is_3_edge_colourable(&k33).unwrap();
        let report = verify_theorem1(&c, Some(0));
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(report.counts, ClassCounts::default());
    }

    #[test]
    fn petersen_witness_passes() {
        let p = make_named(NamedGraph::Petersen).unwrap();
        let r = solve_exact(&p);
        let report = verify_theorem1(&r.witness, Some(r.s_value));
        assert!(report.all_pass(), "{report:?}");
        let counts = [report.counts.a, report.counts.b, report.counts.c];
        let mut sorted = counts;
        sorted.sort_unstable();
        assert_eq!(sorted, [0, 0, 2]);
    }

    #[test]
    fn json_shape() {
        let p = make_named(NamedGraph::Petersen).unwrap();
        let r = solve_exact(&p);
        let json: serde_json::Value =
            serde_json::from_str(&verify_theorem1(&r.witness, None).to_json()).unwrap();
        assert_eq!(json["s"], 2);
        assert!(json["counts"]["A"].is_u64());
        let first = &json["clauses"][0];
        assert_eq!(first["id"], "proper");
        assert_eq!(first["pass"], true);
        assert!(first["witness"].is_null());
        let ids: Vec<&str> = json["clauses"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["id"].as_str().unwrap())
            .collect();
        assert!(ids.contains(&"cycles_disjoint"));
        assert!(ids.contains(&"strong_matching_flag"));
    }

    #[test]
    fn improper_colouring_fails_every_clause() {
        let k4 = make_named(NamedGraph::K4).unwrap();
        let c = EdgeColouring::uniform(&k4, Colour::Alpha);
        let report = verify_theorem1(&c, None);
        assert!(report
            .clauses
            .iter()
            .all(|cl| !cl.pass && cl.witness.is_some()));
    }

    #[test]
    fn extra_delta_edge_detected() {
        // on K4 every proper colouring is a 3-colouring; recolouring a
        // perfect matching edge to δ leaves a missing colour at that edge
        let k4 = make_named(NamedGraph::K4).unwrap();
        let mut c = is_3_edge_colourable(&k4).unwrap();
        c.recolour(0, Colour::Delta);
        let report = verify_theorem1(&c, None);
        assert!(!report.all_pass());
        assert!(!report.clause(ClauseId::DeltaIncidence).unwrap().pass);
        assert!(report.failures().all(|f| f.witness.is_some()));
        assert!(
            !verify_theorem1(&c, Some(0))
                .clause(ClauseId::DeltaCount)
                .unwrap()
                .pass
        );
    }

    #[test]
    fn parity_signature_cases() {
        let k4 = make_named(NamedGraph::K4).unwrap();
        let c = is_3_edge_colourable(&k4).unwrap();
        let cl = classify_delta_edges(&c).unwrap();
        assert_eq!(
            parity_signature(&cl).unwrap(),
            ParitySignature {
                a: 0,
                b: 0,
                c: 0,
                parity_ok: true
            }
        );
        let c5 = make_named(NamedGraph::CycleN(5)).unwrap();
        let c = is_3_edge_colourable(&c5).unwrap();
        let cl = classify_delta_edges(&c).unwrap();
        assert_eq!(parity_signature(&cl).unwrap_err(), StructureError::NotCubic);
    }
}

//! Edge-colourings with colours α, β, γ, δ.

mod kempe;
mod properize;

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeSubset, Graph};

pub use kempe::{kempe_decompose, kempe_swap, ComponentKind, KempeComponent, KempeDecomposition};
pub use properize::properize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Colour {
    #[serde(rename = "a")]
    Alpha,
    #[serde(rename = "b")]
    Beta,
    #[serde(rename = "g")]
    Gamma,
    #[serde(rename = "d")]
    Delta,
}

impl Colour {
    pub const ALL: [Colour; 4] = [Colour::Alpha, Colour::Beta, Colour::Gamma, Colour::Delta];
    /// The three colours other than δ, in preference order.
    pub const BASE: [Colour; 3] = [Colour::Alpha, Colour::Beta, Colour::Gamma];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        match self {
            Colour::Alpha => 'a',
            Colour::Beta => 'b',
            Colour::Gamma => 'g',
            Colour::Delta => 'd',
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Colour::Alpha => "α",
            Colour::Beta => "β",
            Colour::Gamma => "γ",
            Colour::Delta => "δ",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("colouring has {found} entries but the graph has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("Kempe subgraph needs two distinct colours, got {0} twice")]
    SameColours(Colour),
    #[error("vertex {vertex} has two edges coloured {colour}")]
    NotProperOnPair { vertex: usize, colour: Colour },
    #[error("decomposition was computed from a different colouring")]
    StaleDecomposition,
    #[error("component {index} out of range ({count} components)")]
    ComponentOutOfRange { index: usize, count: usize },
    #[error("adjacent edges {0} and {1} share colour {2}, which is not δ")]
    Invalid(usize, usize, Colour),
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("bad colouring file: {0}")]
    Format(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColouringClass {
    Proper,
    DeltaImproper,
    Invalid,
}

/// A total map from the edges of a graph to colours.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeColouring<'g> {
    graph: &'g Graph,
    colours: Vec<Colour>,
}

impl<'g> EdgeColouring<'g> {
    pub fn new(graph: &'g Graph, colours: Vec<Colour>) -> Result<Self, ColouringError> {
        if colours.len() != graph.edge_count() {
            return Err(ColouringError::LengthMismatch {
                expected: graph.edge_count(),
                found: colours.len(),
            });
        }
        Ok(EdgeColouring { graph, colours })
    }

    pub fn uniform(graph: &'g Graph, colour: Colour) -> Self {
        EdgeColouring {
            graph,
            colours: vec![colour; graph.edge_count()],
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn colour(&self, e: usize) -> Colour {
        self.colours[e]
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn into_colours(self) -> Vec<Colour> {
        self.colours
    }

    pub fn recolour(&mut self, e: usize, colour: Colour) {
        self.colours[e] = colour;
    }

    pub fn colour_class(&self, x: Colour) -> EdgeSubset {
        EdgeSubset::from_ids(
            self.graph,
            (0..self.colours.len()).filter(|&e| self.colours[e] == x),
        )
        .expect("ids come from the graph")
    }

    pub fn delta_count(&self) -> usize {
        self.colours.iter().filter(|&&c| c == Colour::Delta).count()
    }

    /// Whether some edge at `v` other than `except` has colour `x`.
    pub fn present_at(&self, v: usize, x: Colour, except: Option<usize>) -> bool {
        self.graph
            .incident_edges(v)
            .any(|e| Some(e) != except && self.colours[e] == x)
    }

    /// α, β, γ in order, minus those on edges at `v` other than `except`.
    pub fn missing_base_colours(&self, v: usize, except: Option<usize>) -> Vec<Colour> {
        Colour::BASE
            .into_iter()
            .filter(|&x| !self.present_at(v, x, except))
            .collect()
    }

    /// Colours seen by `e` on its adjacent edges.
    pub fn colours_around(&self, e: usize) -> [bool; 4] {
        let mut seen = [false; 4];
        for f in self.graph.adjacent_edges(e) {
            seen[self.colours[f].index()] = true;
        }
        seen
    }

    /// First pair of adjacent edges with equal colour, preferring a non-δ
    /// clash if there is one.
    fn first_clash(&self) -> Option<(usize, usize, Colour)> {
        let mut delta_clash = None;
        for v in 0..self.graph.vertex_count() {
            let inc: Vec<usize> = self.graph.incident_edges(v).collect();
            for i in 0..inc.len() {
                for j in i + 1..inc.len() {
                    let (e, f) = (inc[i].min(inc[j]), inc[i].max(inc[j]));
                    if self.colours[e] == self.colours[f] {
                        if self.colours[e] != Colour::Delta {
                            return Some((e, f, self.colours[e]));
                        }
                        delta_clash.get_or_insert((e, f, Colour::Delta));
                    }
                }
            }
        }
        delta_clash
    }

    pub fn classify(&self) -> ColouringClass {
        match self.first_clash() {
            None => ColouringClass::Proper,
            Some((_, _, Colour::Delta)) => ColouringClass::DeltaImproper,
            Some(_) => ColouringClass::Invalid,
        }
    }

    pub fn is_proper(&self) -> bool {
        self.classify() == ColouringClass::Proper
    }

    /// Errors with the offending pair unless the colouring is proper or δ-improper.
    pub fn check_delta_improper(&self) -> Result<(), ColouringError> {
        match self.first_clash() {
            Some((e, f, c)) if c != Colour::Delta => Err(ColouringError::Invalid(e, f, c)),
            _ => Ok(()),
        }
    }

    /// Hash of the colour vector, used to detect stale derived data.
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.graph.edges().hash(&mut h);
        self.colours.hash(&mut h);
        h.finish()
    }

    pub fn to_record(&self) -> ColouringRecord {
        ColouringRecord {
            colours: self.colours.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("colours serialize")
    }

    pub fn from_json(graph: &'g Graph, text: &str) -> Result<Self, ColouringError> {
        let record: ColouringRecord =
            serde_json::from_str(text).map_err(|e| ColouringError::Format(e.to_string()))?;
        EdgeColouring::new(graph, record.colours)
    }
}

impl fmt::Debug for EdgeColouring<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.colours.iter().map(|c| c.symbol()).collect();
        write!(f, "EdgeColouring({s})")
    }
}

/// JSON form of a colouring: `{"colours": ["a","b","g","d", ...]}` indexed
/// by edge id. Unknown fields are ignored on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringRecord {
    pub colours: Vec<Colour>,
}

/// The set of edges coloured `x`.
pub fn colour_class(c: &EdgeColouring<'_>, x: Colour) -> EdgeSubset {
    c.colour_class(x)
}

pub fn classify(c: &EdgeColouring<'_>) -> ColouringClass {
    c.classify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, NamedGraph};
    use Colour::*;

    #[test]
    fn colour_classes() {
        let c5 = make_named(NamedGraph::CycleN(5)).unwrap();
        let all_alpha = EdgeColouring::uniform(&c5, Alpha);
        assert_eq!(all_alpha.colour_class(Alpha).len(), 5);
        let k4 = make_named(NamedGraph::K4).unwrap();
        // edges 01 02 03 12 13 23: perfect matchings {01,23} {02,13} {03,12}
        let proper = EdgeColouring::new(&k4, vec![Alpha, Beta, Gamma, Gamma, Beta, Alpha]).unwrap();
        assert!(proper.colour_class(Delta).is_empty());
        assert_eq!(proper.classify(), ColouringClass::Proper);
    }

    #[test]
    fn classification() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            EdgeColouring::uniform(&star, Delta).classify(),
            ColouringClass::DeltaImproper
        );
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let bad = EdgeColouring::uniform(&p3, Alpha);
        assert_eq!(bad.classify(), ColouringClass::Invalid);
        assert_eq!(
            bad.check_delta_improper(),
            Err(ColouringError::Invalid(0, 1, Alpha))
        );
    }

    #[test]
    fn length_checked() {
        let k4 = make_named(NamedGraph::K4).unwrap();
        assert_eq!(
            EdgeColouring::new(&k4, vec![Alpha]),
            Err(ColouringError::LengthMismatch {
                expected: 6,
                found: 1
            })
        );
    }

    #[test]
    fn json_round_trip() {
        let k4 = make_named(NamedGraph::K4).unwrap();
        let c = EdgeColouring::new(&k4, vec![Alpha, Beta, Gamma, Gamma, Beta, Delta]).unwrap();
        let text = c.to_json();
        assert_eq!(text, r#"{"colours":["a","b","g","g","b","d"]}"#);
        assert_eq!(EdgeColouring::from_json(&k4, &text).unwrap(), c);
        let extra = r#"{"index":3,"colours":["a","b","g","g","b","d"],"s":1}"#;
        assert_eq!(EdgeColouring::from_json(&k4, extra).unwrap(), c);
        assert!(EdgeColouring::from_json(&k4, r#"{"colours":["x"]}"#).is_err());
    }
}

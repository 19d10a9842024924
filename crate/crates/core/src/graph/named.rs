use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

/// Standard instances with fixed vertex numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    K4,
    K33,
    Petersen,
    CycleN(usize),
    FlowerSnark(usize),
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::K4 => write!(f, "k4"),
            NamedGraph::K33 => write!(f, "k33"),
            NamedGraph::Petersen => write!(f, "petersen"),
            NamedGraph::CycleN(k) => write!(f, "cycle{k}"),
            NamedGraph::FlowerSnark(k) => write!(f, "flower{k}"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = GraphError;

    /// Accepts `k4`, `k33`, `petersen`, `cycle<k>` and `flower<k>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        let param = |prefix: &str| -> Result<usize, GraphError> {
            lower[prefix.len()..]
                .parse()
                .map_err(|_| GraphError::InvalidParameter(format!("bad parameter in {s:?}")))
        };
        match lower.as_str() {
            "k4" => Ok(NamedGraph::K4),
            "k33" | "k3,3" => Ok(NamedGraph::K33),
            "petersen" => Ok(NamedGraph::Petersen),
            _ if lower.starts_with("cycle") => Ok(NamedGraph::CycleN(param("cycle")?)),
            _ if lower.starts_with("flower") => Ok(NamedGraph::FlowerSnark(param("flower")?)),
            _ => Err(GraphError::InvalidParameter(format!(
                "unknown graph name {s:?}"
            ))),
        }
    }
}

/// Builds a named graph.
///
/// Numbering:
/// - `K4`: vertices 0..4, edges in lexicographic order.
/// - `K33`: sides {0,1,2} and {3,4,5}.
/// - `Petersen`: outer cycle 0-1-2-3-4, spokes i-(i+5), inner pentagram
///   5-7-9-6-8.
/// - `CycleN(k)`: edges i-(i+1 mod k).
/// - `FlowerSnark(k)`: for each i in 0..k a centre a_i = i joined to
///   b_i = k+i, c_i = 2k+i and d_i = 3k+i; the b_i form a k-cycle and
///   c_0..c_{k-1} d_0..d_{k-1} form a single 2k-cycle.
pub fn make_named(name: NamedGraph) -> Result<Graph, GraphError> {
    let edges: Vec<(usize, usize)> = match name {
        NamedGraph::K4 => vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        NamedGraph::K33 => (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect(),
        NamedGraph::Petersen => {
            let mut e = Vec::with_capacity(15);
            for i in 0..5 {
                e.push((i, (i + 1) % 5));
            }
            for i in 0..5 {
                e.push((i, i + 5));
            }
            for i in 0..5 {
                e.push((5 + i, 5 + (i + 2) % 5));
            }
            e
        }
        NamedGraph::CycleN(k) => {
            if k < 3 {
                return Err(GraphError::InvalidParameter(format!(
                    "cycle length {k} < 3"
                )));
            }
            (0..k).map(|i| (i, (i + 1) % k)).collect()
        }
        NamedGraph::FlowerSnark(k) => {
            if k < 3 || k % 2 == 0 {
                return Err(GraphError::InvalidParameter(format!(
                    "flower snark parameter {k} must be odd and at least 3"
                )));
            }
            let (a, b, c, d) = (0, k, 2 * k, 3 * k);
            let mut e = Vec::with_capacity(6 * k);
            for i in 0..k {
                e.extend([(a + i, b + i), (a + i, c + i), (a + i, d + i)]);
            }
            for i in 0..k {
                e.push((b + i, b + (i + 1) % k));
            }
            // c_0 .. c_{k-1} d_0 .. d_{k-1} back to c_0
            let ring: Vec<usize> = (0..k).map(|i| c + i).chain((0..k).map(|i| d + i)).collect();
            for i in 0..ring.len() {
                e.push((ring[i], ring[(i + 1) % ring.len()]));
            }
            e
        }
    };
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::new(n, &edges)
}

//! Simple undirected graphs of maximum degree three.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..n` and edges are
//! numbered `0..m` in insertion order; both numberings are stable for the
//! lifetime of the value, so edge ids can be used to index colourings and
//! edge subsets.

mod canon;
mod edgelist;
mod enumerate;
mod graph6;
mod named;
mod random;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

pub use canon::canonical_form;
pub use edgelist::{parse_edge_list, to_edge_list};
pub use enumerate::{enumerate_cubic, CUBIC_ENUMERATION_NOTE};
pub use graph6::{parse_graph6, to_graph6};
pub use named::{make_named, NamedGraph};
pub use random::random_subcubic;

/// Largest vertex degree a [`Graph`] may have.
pub const MAX_DEGREE: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {u}-{v} references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex {vertex} has degree {degree}, maximum is 3")]
    DegreeTooLarge { vertex: usize, degree: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl GraphError {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        GraphError::Parse {
            offset,
            message: message.into(),
        }
    }
}

/// A simple undirected graph with every degree at most three.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges, out-of-range
    /// endpoints and degrees above three. Edge `i` of the result is
    /// `edges[i]` with its endpoints ordered `u < v`.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertex_count];
        let mut normalized = Vec::with_capacity(edges.len());
        for (id, &(a, b)) in edges.iter().enumerate() {
            if a >= vertex_count || b >= vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    u: a,
                    v: b,
                    n: vertex_count,
                });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if adjacency[u].iter().any(|&(w, _)| w == v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
            for x in [u, v] {
                if adjacency[x].len() > MAX_DEGREE {
                    return Err(GraphError::DegreeTooLarge {
                        vertex: x,
                        degree: adjacency[x].len(),
                    });
                }
            }
            normalized.push((u, v));
        }
        Ok(Graph {
            vertex_count,
            edges: normalized,
            adjacency,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints `(u, v)` of edge `e`, with `u < v`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbour, edge id)` pairs at `v`, in insertion order.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&(_, e)| e)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_cubic(&self) -> bool {
        self.adjacency.iter().all(|a| a.len() == 3)
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adjacency[u]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// The end of `e` that is not `v`.
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v, "vertex {v} is not an end of edge {e}");
            a
        }
    }

    /// Edges sharing an end with `e`, excluding `e` itself.
    pub fn adjacent_edges(&self, e: usize) -> impl Iterator<Item = usize> + '_ {
        let (u, v) = self.edges[e];
        self.incident_edges(u)
            .chain(self.incident_edges(v))
            .filter(move |&f| f != e)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbours(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.components().len() == 1
    }

    /// Splits the graph into its connected components. Each part keeps the
    /// relative order of vertices and edges of the parent graph.
    pub fn component_subgraphs(&self) -> Vec<Subgraph> {
        let components = self.components();
        let mut local = vec![0; self.vertex_count];
        let mut owner = vec![0; self.vertex_count];
        for (c, vertices) in components.iter().enumerate() {
            for (i, &v) in vertices.iter().enumerate() {
                local[v] = i;
                owner[v] = c;
            }
        }
        components
            .into_iter()
            .enumerate()
            .map(|(c, vertices)| {
                let edge_map: Vec<usize> = (0..self.edge_count())
                    .filter(|&e| owner[self.edges[e].0] == c)
                    .collect();
                let edges: Vec<(usize, usize)> = edge_map
                    .iter()
                    .map(|&e| (local[self.edges[e].0], local[self.edges[e].1]))
                    .collect();
                let graph = Graph::new(vertices.len(), &edges).expect("component of a valid graph");
                Subgraph {
                    graph,
                    vertex_map: vertices,
                    edge_map,
                }
            })
            .collect()
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.vertex_count {
            let mut dist = vec![usize::MAX; self.vertex_count];
            let mut parent_edge = vec![usize::MAX; self.vertex_count];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &(w, e) in &self.adjacency[v] {
                    if e == parent_edge[v] {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent_edge[w] = e;
                        queue.push_back(w);
                    } else {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Number of edges of the subgraph induced on `vertices`.
    pub fn induced_edge_count(&self, vertices: &BTreeSet<usize>) -> usize {
        self.edges
            .iter()
            .filter(|(u, v)| vertices.contains(u) && vertices.contains(v))
            .count()
    }

    /// The same graph with vertex `v` renamed to `perm[v]`. Edge order is kept.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(self.vertex_count, &edges).expect("relabelling preserves validity")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

/// A connected component lifted out of a larger graph.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    /// Parent vertex of each local vertex.
    pub vertex_map: Vec<usize>,
    /// Parent edge id of each local edge.
    pub edge_map: Vec<usize>,
}

/// A set of edge ids of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgeSubset {
    edge_count: usize,
    members: BTreeSet<usize>,
}

impl EdgeSubset {
    pub fn new(graph: &Graph) -> Self {
        EdgeSubset {
            edge_count: graph.edge_count(),
            members: BTreeSet::new(),
        }
    }

    pub fn from_ids(
        graph: &Graph,
        ids: impl IntoIterator<Item = usize>,
    ) -> Result<Self, GraphError> {
        let mut set = EdgeSubset::new(graph);
        for e in ids {
            set.insert(e)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, e: usize) -> Result<bool, GraphError> {
        if e >= self.edge_count {
            return Err(GraphError::InvalidParameter(format!(
                "edge id {e} out of range 0..{}",
                self.edge_count
            )));
        }
        Ok(self.members.insert(e))
    }

    pub fn remove(&mut self, e: usize) -> bool {
        self.members.remove(&e)
    }

    pub fn contains(&self, e: usize) -> bool {
        self.members.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset(&self, other: &EdgeSubset) -> bool {
        self.members.is_subset(&other.members)
    }

    /// True if no two members share an end.
    pub fn is_matching(&self, graph: &Graph) -> bool {
        let mut used = vec![false; graph.vertex_count()];
        for e in self.iter() {
            let (u, v) = graph.endpoints(e);
            if used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        true
    }

    /// A matching with no graph edge joining two of its edges.
    pub fn is_strong_matching(&self, graph: &Graph) -> bool {
        if !self.is_matching(graph) {
            return false;
        }
        let covered: BTreeSet<usize> = self
            .iter()
            .flat_map(|e| {
                let (u, v) = graph.endpoints(e);
                [u, v]
            })
            .collect();
        graph.induced_edge_count(&covered) == self.len()
    }
}

impl<'a> IntoIterator for &'a EdgeSubset {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter().copied()
    }
}

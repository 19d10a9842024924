//! Plain-text edge lists: one `u v` pair of 0-based vertex indices per line.
//!
//! An optional first line `n m` gives the vertex and edge counts. It is taken
//! as a header only when exactly `m` edge lines follow and every index on them
//! is below `n`; otherwise the first line is read as an edge. Blank lines and
//! lines starting with `#` are ignored.

use super::{Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut rows: Vec<(usize, (usize, usize))> = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.trim();
        if !content.is_empty() && !content.starts_with('#') {
            let mut fields = content.split_whitespace();
            let pair = match (fields.next(), fields.next(), fields.next()) {
                (Some(a), Some(b), None) => a.parse::<usize>().ok().zip(b.parse::<usize>().ok()),
                _ => None,
            };
            match pair {
                Some(p) => rows.push((offset, p)),
                None => {
                    return Err(GraphError::parse(
                        offset,
                        format!("expected `u v`, found {content:?}"),
                    ))
                }
            }
        }
        offset += line.len();
    }

    let header_fits = |(n, m): (usize, usize)| {
        rows.len() == m + 1 && rows[1..].iter().all(|&(_, (u, v))| u < n && v < n)
    };
    let (vertex_count, body) = match rows.first() {
        Some(&(_, first)) if header_fits(first) => (first.0, &rows[1..]),
        _ => {
            let n = rows
                .iter()
                .map(|&(_, (u, v))| u.max(v) + 1)
                .max()
                .unwrap_or(0);
            (n, &rows[..])
        }
    };
    let edges: Vec<(usize, usize)> = body.iter().map(|&(_, e)| e).collect();
    Graph::new(vertex_count, &edges)
}

/// Writes the graph with an `n m` header line.
pub fn to_edge_list(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.vertex_count(), graph.edge_count());
    for &(u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

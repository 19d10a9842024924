//! Splitting an input stream into graphs.

use crate::graph::{parse_edge_list, parse_graph6, Graph, GraphError};

use super::InputFormat;

/// A successfully parsed input graph.
#[derive(Debug, Clone)]
pub struct GraphItem {
    /// Position among all input items, parse failures included.
    pub index: usize,
    /// 1-based line where the item starts.
    pub line: usize,
    /// The graph6 text, or `graph<index>` for edge lists.
    pub name: String,
    pub graph: Graph,
}

#[derive(Debug, Clone)]
pub struct InputError {
    pub index: usize,
    pub line: usize,
    /// Byte offset inside the item, for syntax errors.
    pub offset: Option<usize>,
    pub message: String,
}

impl InputError {
    fn new(index: usize, line: usize, err: GraphError) -> Self {
        let offset = match err {
            GraphError::Parse { offset, .. } => Some(offset),
            _ => None,
        };
        InputError {
            index,
            line,
            offset,
            message: err.to_string(),
        }
    }
}

/// Edge-list inputs hold several graphs separated by lines reading `---`.
pub const EDGE_LIST_SEPARATOR: &str = "---";

/// Parses every item of `text`. graph6 input has one graph per non-blank
/// line; an optional `>>graph6<<` header is accepted on each line.
pub fn read_graphs(text: &str, format: InputFormat) -> Vec<Result<GraphItem, InputError>> {
    match format {
        InputFormat::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .enumerate()
            .map(|(index, (i, l))| {
                let l = l.trim_end_matches('\r');
                parse_graph6(l)
                    .map(|graph| GraphItem {
                        index,
                        line: i + 1,
                        name: l.trim_start_matches(">>graph6<<").to_string(),
                        graph,
                    })
                    .map_err(|e| InputError::new(index, i + 1, e))
            })
            .collect(),
        InputFormat::Edgelist => {
            let mut blocks: Vec<(usize, String)> = Vec::new();
            let mut start = 1;
            let mut current = String::new();
            for (i, l) in text.lines().enumerate() {
                if l.trim() == EDGE_LIST_SEPARATOR {
                    blocks.push((start, std::mem::take(&mut current)));
                    start = i + 2;
                } else {
                    current.push_str(l);
                    current.push('\n');
                }
            }
            blocks.push((start, current));
            blocks
                .into_iter()
                .filter(|(_, b)| {
                    b.lines()
                        .any(|l| !l.trim().is_empty() && !l.trim().starts_with('#'))
                })
                .enumerate()
                .map(|(index, (line, block))| {
                    parse_edge_list(&block)
                        .map(|graph| GraphItem {
                            index,
                            line,
                            name: format!("graph{index}"),
                            graph,
                        })
                        .map_err(|e| InputError::new(index, line, e))
                })
                .collect()
        }
    }
}

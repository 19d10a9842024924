//! Output records and their JSON, CSV and DOT forms.

use std::fmt::Write as _;

use serde::Serialize;

use crate::colouring::{Colour, EdgeColouring};
use crate::solver::Method;
use crate::structure::{ClauseId, VerificationReport};

use super::input::InputError;

#[derive(Debug, Clone, Serialize)]
pub struct SolveRecord {
    pub index: usize,
    pub line: usize,
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub s: usize,
    pub method: Method,
    pub colours: Vec<Colour>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyRecord {
    pub index: usize,
    pub line: usize,
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub pass: bool,
    #[serde(flatten)]
    pub report: VerificationReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeRecord {
    pub index: usize,
    pub line: usize,
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub s: usize,
    pub method: Method,
    pub cubic: bool,
    pub girth: Option<usize>,
    pub counts: crate::structure::ClassCounts,
    pub strong_matching: bool,
    pub verified: bool,
    pub failing: Vec<ClauseId>,
    pub colours: Vec<Colour>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorRecord {
    pub index: usize,
    pub line: usize,
    pub error: String,
    pub offset: Option<usize>,
}

impl From<&InputError> for ErrorRecord {
    fn from(e: &InputError) -> Self {
        ErrorRecord {
            index: e.index,
            line: e.line,
            error: e.message.clone(),
            offset: e.offset,
        }
    }
}

pub fn json_line<T: Serialize>(record: &T) -> String {
    let mut s = serde_json::to_string(record).expect("records serialize");
    s.push('\n');
    s
}

pub fn method_name(m: Method) -> &'static str {
    match m {
        Method::Exact => "Exact",
        Method::TwoFactorUpperBound => "TwoFactorUpperBound",
        Method::HeuristicUpperBound => "HeuristicUpperBound",
    }
}

/// Quotes a CSV field when it contains a delimiter, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn dot_colour(c: Colour) -> &'static str {
    match c {
        Colour::Alpha => "red",
        Colour::Beta => "blue",
        Colour::Gamma => "forestgreen",
        Colour::Delta => "black",
    }
}

/// An undirected DOT graph with one statement per vertex and edge. Edges
/// carry their colour as label and stroke; δ edges are bold and dashed.
pub fn to_dot(name: &str, c: &EdgeColouring<'_>) -> String {
    let g = c.graph();
    let mut out = String::new();
    writeln!(
        out,
        "graph \"{}\" {{",
        name.replace('\\', "\\\\").replace('"', "\\\"")
    )
    .unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v};").unwrap();
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let colour = c.colour(e);
        let style = if colour == Colour::Delta {
            ", style=\"bold,dashed\", penwidth=3"
        } else {
            ""
        };
        writeln!(
            out,
            "  {u} -- {v} [label=\"{}\", color={}{style}];",
            colour,
            dot_colour(colour)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

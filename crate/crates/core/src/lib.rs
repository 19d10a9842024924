//! δ-minimum edge-colourings of graphs with maximum degree three.
//!
//! Colours are α, β, γ and the parsimony colour δ. A proper colouring is
//! δ-minimum when no proper colouring puts δ on fewer edges; that count is
//! the colour number `s(G)`.
//!
//! - [`graph`]: graph type, graph6 and edge-list I/O, generators.
//! - [`colouring`]: colourings, Kempe subgraphs and the δ-improper to proper
//!   reduction.
//! - [`solver`]: exact and constructive bounds on `s(G)`, 2-factors.
//! - [`structure`]: δ-edge classification, δ-shifts along odd cycles and the
//!   structural verifier.
//! - [`cli`]: batch front end used by the `deltamin` binary.

pub mod cli;
pub mod colouring;
pub mod graph;
pub mod solver;
pub mod structure;

//! Computing the colour number `s(G)`.
//!
//! [`solve_exact`] grows a matching `M` from size zero and returns the first
//! one for which `G - M` is 3-edge-colourable; δ on `M` plus that colouring
//! is a δ-minimum colouring. [`resistance_exact`] runs the same search over
//! arbitrary edge sets. Upper bounds come from 2-factors
//! ([`lemma1_colouring`]) and a Kempe-move local search
//! ([`heuristic_descent`]).

mod colourable;
mod exact;
mod heuristic;
mod two_factor;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colouring::EdgeColouring;

pub use colourable::is_3_edge_colourable;
pub use exact::{resistance_exact, solve_exact};
pub use heuristic::{descend_from, heuristic_descent};
pub use two_factor::{
    enumerate_two_factors, find_two_factor, lemma1_colouring, TwoFactor,
    TWO_FACTOR_ENUMERATION_LIMIT,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph has {order} vertices, limit is {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("2-factor does not fit the graph: {0}")]
    InconsistentTwoFactor(String),
    #[error(transparent)]
    Colouring(#[from] crate::colouring::ColouringError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    Exact,
    TwoFactorUpperBound,
    HeuristicUpperBound,
}

/// A proper colouring together with its δ count. For [`Method::Exact`] the
/// count is `s(G)`; otherwise it is an upper bound.
#[derive(Debug, Clone)]
pub struct SolveResult<'g> {
    pub s_value: usize,
    pub witness: EdgeColouring<'g>,
    pub method: Method,
}

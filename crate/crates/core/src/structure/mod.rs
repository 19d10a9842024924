//! Structure of δ-minimum colourings.
//!
//! Every δ edge `e = uv` of a δ-minimum colouring has its ends joined by an
//! even alternating path in φ(α,β), φ(β,γ) or φ(α,γ); the edge is then in
//! class A, B or C respectively, and the path plus `e` is its associated odd
//! cycle. This module computes that classification, moves δ around an
//! associated cycle, and checks the structural claims that hold for every
//! δ-minimum colouring.

mod classify;
mod shift;
mod verify;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colouring::Colour;

pub use classify::{classify_delta_edges, AssociatedCycle, DeltaClassification};
pub use shift::shift_delta;
pub use verify::{
    parity_signature, verify_theorem1, ClassCounts, Clause, ClauseId, ParitySignature,
    VerificationReport, Witness,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DeltaClass {
    A,
    B,
    C,
}

impl DeltaClass {
    pub const ALL: [DeltaClass; 3] = [DeltaClass::A, DeltaClass::B, DeltaClass::C];

    /// The two colours alternating on the associated cycle.
    pub fn colours(self) -> (Colour, Colour) {
        match self {
            DeltaClass::A => (Colour::Alpha, Colour::Beta),
            DeltaClass::B => (Colour::Beta, Colour::Gamma),
            DeltaClass::C => (Colour::Alpha, Colour::Gamma),
        }
    }

    /// The colour of every edge leaving an associated cycle of this class.
    pub fn external(self) -> Colour {
        match self {
            DeltaClass::A => Colour::Gamma,
            DeltaClass::B => Colour::Alpha,
            DeltaClass::C => Colour::Beta,
        }
    }
}

impl std::fmt::Display for DeltaClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("colouring is not proper")]
    NotProper,
    #[error(
        "δ edge {0} has no even alternating path between its ends; the colouring is not δ-minimum"
    )]
    Unclassified(usize),
    #[error("classification was computed from a different colouring")]
    StaleClassification,
    #[error("edge {edge} is not a class {class} δ edge")]
    NotMember { edge: usize, class: DeltaClass },
    #[error("edge {0} is not on the associated cycle")]
    TargetNotOnCycle(usize),
    #[error("parity signature is only defined for cubic graphs")]
    NotCubic,
    #[error("δ edge {0} of a cubic graph lies in more than one class")]
    DoubleMembership(usize),
    #[error("moving δ onto edge {0} made the colouring improper")]
    ShiftBrokeProperness(usize),
}

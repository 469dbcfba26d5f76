//! Error type shared across the crate.

use num_bigint::BigUint;
use num_rational::BigRational;

/// Errors produced by parsing and invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A divisor index outside the positive integers.
    #[error("invalid divisor index: {0}")]
    InvalidIndex(String),

    /// Malformed or out-of-range weight-system input.
    #[error("invalid weight system: {0}")]
    InvalidWeightSystem(String),

    /// An argument outside an operation's documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A divisor that must be integral carries a fractional coefficient.
    ///
    /// For the monodromy divisor this signals a weight system that admits no
    /// isolated singularity (or an internal bug).
    #[error("non-integral coefficient {coefficient} on L{index}")]
    NonIntegralCoefficient {
        index: BigUint,
        coefficient: BigRational,
    },

    /// The classification theorem does not apply to the given invariants.
    #[error("classification precondition failed: {0}")]
    ClassificationPrecondition(String),

    /// An internal cross-check failed; indicates a bug, not bad input.
    #[error("internal invariant violation: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// True for errors that signal an implementation bug rather than
    /// rejectable input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InvariantViolation(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

//! Crate-wide error type. Every failure is typed; no operation returns an
//! approximate answer in place of an error.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not invertible: series has zero constant term")]
    NotInvertible,

    #[error("not symmetric")]
    NotSymmetric,

    #[error("mismatched variable counts: {0} vs {1}")]
    NvarsMismatch(usize, usize),

    #[error("codimension exceeds ambient dimension: c={c}, n={n}")]
    CodimensionExceedsAmbient { c: usize, n: usize },

    #[error("not a complete-intersection numerator: {0}")]
    NotCompleteIntersectionNumerator(String),

    #[error("regularity hypothesis violated: {0}")]
    RegularityHypothesisViolated(String),

    #[error("not a complete-intersection Hilbert polynomial: {0}")]
    NotCompleteIntersectionPolynomial(String),

    #[error("invariant index {0} unavailable at this ambient dimension")]
    MissingInvariant(usize),

    #[error("not realizable: {0}")]
    NotRealizable(String),

    #[error("inconsistent invariants: {0}")]
    InconsistentInvariants(String),

    #[error("unbounded search: {0}")]
    UnboundedSearch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("checkpoint: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

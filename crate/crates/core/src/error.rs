use thiserror::Error;

use crate::geometry::PointId;

/// Errors raised across the crate.
///
/// Variants that signal a violated geometric precondition (degenerate input,
/// non-generic ray) are distinct from `InternalInvariantViolation`, which only
/// fires when exact arithmetic contradicts a proven case analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("degenerate transversal: points affinely dependent or origin on their affine hull")]
    DegenerateTransversal,

    #[error("the origin is not a valid query point here")]
    ZeroPoint,

    #[error("colour {0} has no points")]
    EmptyColour(usize),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("operation requires dimension {expected}, configuration has dimension {found}")]
    WrongDimension { expected: usize, found: usize },

    #[error("degenerate pivot: {found} containing (d+1)-subsets instead of 2")]
    DegeneratePivot { found: usize },

    #[error("invalid start node: {0}")]
    InvalidStart(String),

    #[error("transversals overlap or have different missing colours")]
    IncompatibleTransversals,

    #[error("direction is not generic for this complex")]
    NonGenericDirection,

    #[error("a cell of the complex has the origin in its affine hull")]
    DegenerateCell,

    #[error("no directed circuit: node {0:?} is a source or a sink")]
    NoCircuit(Option<PointId>),

    #[error("condition violated: {0}")]
    ConditionViolated(String),

    #[error("enumeration size {size} exceeds bound {bound}")]
    SizeBound { size: u128, bound: u128 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("retries exhausted: {0}")]
    RetryExhausted(String),

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

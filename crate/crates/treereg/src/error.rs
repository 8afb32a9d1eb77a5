use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Two values that must live in the same ambient variable set do not.
    #[error("ambient variable counts differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    /// Malformed input data (non-minimal generators, nested facets, bad indices, ...).
    #[error("structural error: {0}")]
    Structural(String),

    /// An operation was called outside its stated domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A configurable resource cap was exceeded; the result is not partial, it is absent.
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    /// An internal invariant failed. Either a bug or a counterexample to a
    /// verified statement; both must surface loudly.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Text that does not follow the graph6 or color-matrix grammar.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// A request outside what this implementation supports (vertex bounds, budgets).
    #[error("unsupported: {0}")]
    Capability(String),

    /// Well-formed but semantically invalid input (bad connection set, color mismatch, ...).
    #[error("invalid input: {0}")]
    Input(String),

    #[error("cannot parse problem at `{token}`: {reason}")]
    Problem { token: String, reason: String },

    #[error("arithmetic overflow while {0}")]
    Overflow(&'static str),

    /// A maintained quantity disagreed with its recomputation.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("not found: {0}")]
    NotFound(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

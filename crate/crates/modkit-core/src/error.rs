use thiserror::Error;

/// Errors produced by the modulus toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed edge-list or JSON input.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A vertex id that does not exist in the graph.
    #[error("unknown vertex: {0}")]
    UnknownVertex(String),

    /// A precondition on an argument was violated (bad exponent, size guard, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested combinatorial object does not exist (no perfect matching,
    /// isolated vertex in a covering family, ...).
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// The numerical solver failed to converge or stalled.
    #[error("solver error: {0}")]
    Solver(String),

    /// A result without the structure needed for post-processing
    /// (e.g. all multipliers zero when extracting a pmf).
    #[error("degenerate result: {0}")]
    Degenerate(String),

    /// Mismatched vector dimensions.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

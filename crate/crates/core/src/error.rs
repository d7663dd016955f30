use thiserror::Error;

use crate::graph::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("node {index} out of range 1..={n} (record for source {record})")]
    Range {
        record: usize,
        index: usize,
        n: usize,
    },

    #[error("insufficient data: need at least {needed} support points, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("matrix of order {n} exceeds the dense limit of {limit}")]
    Size { n: usize, limit: usize },

    #[error(
        "power iteration did not converge after {iterations} iterations (residual {residual:e})"
    )]
    Convergence { iterations: usize, residual: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid probability at node {node}: {value}")]
    InvalidProbability { node: usize, value: f64 },

    #[error("invalid rank vector: {0}")]
    InvalidRank(String),

    #[error("QR iteration failed to converge for eigenvalue {index}")]
    Numerical { index: usize },

    #[error("label not found: {0:?}")]
    NotFound(String),

    #[error("invalid scenario link {src}->{dst}: {reason}")]
    Scenario {
        src: NodeId,
        dst: NodeId,
        reason: String,
    },

    #[error("incompatible scenario: {0}")]
    Incompatible(String),

    #[error("i/o: {0}")]
    Io(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

use thiserror::Error;

/// Errors raised by constructors and operations whose preconditions fail.
///
/// Report-style operations (metric validation, certificate and isometry
/// checks) never use this type: they return a report listing every problem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {n} is below the minimum {min} for {what}")]
    TooFewVertices { n: usize, min: usize, what: &'static str },

    #[error("vertex count {n} exceeds the configured maximum {max} for {what}")]
    TooManyVertices { n: usize, max: usize, what: &'static str },

    #[error("invalid pair ({i}, {j}) for n = {n}: need 1 <= i < j <= n")]
    InvalidPair { i: usize, j: usize, n: usize },

    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("trivial cut (empty or full) where a nontrivial cut is required")]
    TrivialCut,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("negative entry {value} at {position}")]
    NegativeEntry { position: String, value: String },

    #[error("zero distance between distinct vertices {i} and {j}")]
    ZeroDistance { i: usize, j: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

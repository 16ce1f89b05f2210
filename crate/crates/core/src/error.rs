use thiserror::Error;

/// Errors raised by every operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DgpError {
    #[error("empty graph")]
    EmptyGraph,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge {{{u}, {v}}}: {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("instance too large for exact search: n = {n} exceeds max_n = {max_n}")]
    TooLarge { n: usize, max_n: usize },

    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },

    #[error("degree condition violated: vertex {vertex} has degree {degree}, need at least {required}")]
    DegreeCondition {
        vertex: usize,
        degree: usize,
        required: usize,
    },

    #[error("graph not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },

    #[error("graph has a K4 component containing vertex {vertex}")]
    K4Component { vertex: usize },

    #[error("graph not connected: vertex {vertex} unreachable from vertex 0")]
    Disconnected { vertex: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A result contradicted a guarantee the algorithm relies on.
    #[error("internal invariant failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, DgpError>;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("odd degree sum {0}: half-edges cannot be perfectly matched")]
    OddDegreeSum(usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("cycle component has empty kernel (vertex {0} lies on a bare cycle)")]
    CycleComponent(usize),

    #[error("kernel contraction requires minimum degree 2, vertex {vertex} has degree {degree}")]
    DegreeTooLow { vertex: usize, degree: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex set does not induce a connected subgraph")]
    DisconnectedSet,

    #[error("vertex {target} is unreachable from {from}")]
    Unreachable { from: usize, target: usize },

    #[error("graph is not regular (vertex {vertex} has degree {degree}, expected {expected})")]
    NotRegular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },

    #[error("exact mode limited to {cap} vertices (graph has {n}); use sampled mode")]
    ExactCapExceeded { n: usize, cap: usize },

    #[error("ε³n too small for young-giant model")]
    YoungGiantTooSmall,

    #[error("no kernel slots (degree ≥ 3) after {0} intensity redraws")]
    EmptyKernel(usize),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("loop at vertex {0} rejected")]
    LoopRejected(usize),

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("multiplicity must be at least 1")]
    NonPositiveMultiplicity,

    #[error("pair {{{u},{v}}} has {available} parallel edges, cannot remove {requested}")]
    NotEnoughParallelEdges {
        u: usize,
        v: usize,
        available: u32,
        requested: u32,
    },

    #[error("syntax error on line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("instance too large: {0}")]
    InstanceTooLarge(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("cycle is not a shortest cycle of the selected subgraph")]
    NotShortestCycle,

    #[error("vertex {0} is not in the acyclic remainder V0")]
    VertexNotInV0(usize),

    #[error("coloring does not cover the edges of the graph: {0}")]
    CoverageMismatch(String),

    #[error("solver time budget exceeded")]
    Timeout,

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

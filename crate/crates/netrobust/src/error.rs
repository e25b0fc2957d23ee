use thiserror::Error;

/// Errors surfaced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("mask dimensions ({mask_nodes} nodes, {mask_edges} edges) do not match graph ({graph_nodes} nodes, {graph_edges} edges)")]
    DimensionMismatch {
        graph_nodes: usize,
        graph_edges: usize,
        mask_nodes: usize,
        mask_edges: usize,
    },

    #[error("node {0} has already been removed")]
    QueriedRemoved(usize),

    #[error("{kind} {id} is already removed")]
    DoubleRemoval { kind: &'static str, id: usize },

    #[error("{kind} id {id} out of range (limit {limit})")]
    IdOutOfRange {
        kind: &'static str,
        id: usize,
        limit: usize,
    },

    #[error("operation requires a {expected} graph")]
    WrongGraphKind { expected: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("no alive targets remain")]
    NoAliveTargets,

    #[error("exhaustive attack over {0} objects requires a sample cap ({0}! is not enumerable)")]
    ExaTooLarge(usize),

    #[error("trace has {have} samples but the measure requires {need}; pass the truncation flag to evaluate a partial trace")]
    TraceTooShort { have: usize, need: usize },

    #[error("driver counts are not present in the trace; request a controllability measure when sampling")]
    MissingDriverCounts,

    #[error("no feasible degree-preserving swap found within the retry limit")]
    SwapStagnation,

    #[error("failed to parse edge list at line {line}: {reason}")]
    EdgeListParse { line: usize, reason: String },

    #[error("self-loop ({0},{0}) is not allowed in a simple graph")]
    SelfLoop(usize),

    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(usize, usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

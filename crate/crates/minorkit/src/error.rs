use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {n} vertices, limit is 64")]
    TooLarge { n: usize },

    #[error("vertex {v} out of range")]
    VertexNotFound { v: usize },

    #[error("edge ({u},{v}) not in graph")]
    EdgeNotFound { u: usize, v: usize },

    #[error("invalid edge ({u},{v}): {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },

    #[error("operation needs at least one edge")]
    Edgeless,

    #[error("vertex connectivity undefined for {n} vertices")]
    ConnectivityUndefined { n: usize },

    #[error("graph is not cubic")]
    NotCubic,

    #[error("vertices {a},{b},{c} do not form a triangle")]
    NotATriangle { a: usize, b: usize, c: usize },

    #[error("triangle {a},{b},{c} separates the graph")]
    SeparatingTriangle { a: usize, b: usize, c: usize },

    #[error("invalid split: {0}")]
    InvalidSplit(String),

    #[error("invalid sum: {0}")]
    InvalidSum(String),

    #[error("invalid handle: {0}")]
    InvalidHandle(String),

    #[error("graph is not 3-connected")]
    NotThreeConnected,

    #[error("graph is not 4-connected")]
    NotFourConnected,

    #[error("graph is not planar")]
    NotPlanar,

    #[error("postcondition violated: {0}")]
    Postcondition(String),

    #[error("search budget of {limit} nodes exhausted")]
    BudgetExhausted { limit: u64 },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list: {0}")]
    EdgeList(String),

    #[error("unknown graph name {0:?}")]
    UnknownName(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

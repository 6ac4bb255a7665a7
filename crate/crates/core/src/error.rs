use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("edge {{{0}, {0}}} is a loop; loops belong in the loop set")]
    LoopEdge(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("graph order {order} outside supported range {min}..={max}")]
    OrderOutOfRange { order: usize, min: usize, max: usize },

    #[error("vertex set must be non-empty")]
    EmptyVertexSet,

    #[error("vertices {from} and {to} are in different components")]
    Disconnected { from: usize, to: usize },

    #[error("host graph is not the cycle 0-1-...-(n-1)-0")]
    NotACycle,

    #[error("loop set is empty")]
    NoLoops,

    #[error("matrix dimension {dim} exceeds limit {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed graph JSON: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

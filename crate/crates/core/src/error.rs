use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph order {0} is outside 1..=64")]
    OrderOutOfRange(usize),

    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph is disconnected: vertex {unreachable} is unreachable")]
    Disconnected { unreachable: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("order {n} is not supported here (maximum {max})")]
    UnsupportedOrder { n: usize, max: usize },

    #[error(
        "power iteration did not converge after {iterations} iterations (residual {residual:e})"
    )]
    NotConvergent { iterations: usize, residual: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector is not unit length (norm {0})")]
    NotUnit(f64),

    #[error("index groups do not partition the vertex set: {0}")]
    NotPartition(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("inapplicable: {0}")]
    Inapplicable(String),

    #[error("corpus line {line}: {message}")]
    Corpus { line: usize, message: String },
}

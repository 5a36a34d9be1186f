use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("{0} requires a connected graph")]
    Disconnected(&'static str),
    #[error("{0} is not an edge")]
    NotAnEdge(String),
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("eigenvector iteration did not converge after {0} steps")]
    NoConvergence(usize),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("search space of {size} subsets exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: u128 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("table shape mismatch: {0}")]
    ShapeMismatch(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

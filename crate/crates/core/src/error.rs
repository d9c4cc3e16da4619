use crate::vset::Vertex;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("vertex id {0} out of range (ids must be below 64)")]
    VertexOutOfRange(usize),
    #[error("vertex {0} not in graph")]
    MissingVertex(Vertex),
    #[error("edge {0}-{1} not in graph")]
    MissingEdge(Vertex, Vertex),
    #[error("graph is not {0}-connected")]
    NotConnected(usize),
    #[error("enumeration budget exceeded: {needed} candidates > budget {budget} (raise TRISEP_BUDGET)")]
    Budget { needed: u128, budget: u128 },
    #[error("{0} vertices exceed the exhaustive bound {1}; pass a larger bound to override")]
    BoundExceeded(usize, usize),
    #[error("invalid parameters for {family}: {msg}")]
    InvalidParams { family: String, msg: String },
    #[error("invalid separation: {0}")]
    InvalidSeparation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("classification failed: {0}")]
    Classification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

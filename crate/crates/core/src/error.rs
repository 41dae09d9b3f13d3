use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is not in the graph")]
    MissingVertex(VertexId),

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(VertexId, VertexId),

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("operation {index} of the witness failed: {source}")]
    Replay {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("graph has {n} vertices, above the exact-computation limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("input is not {0}")]
    NotInClass(&'static str),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}

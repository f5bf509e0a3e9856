use thiserror::Error;

use crate::vertex_set::{VertexSet, CAPACITY};

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} vertices exceed the supported capacity of {CAPACITY}")]
    Capacity(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0} is not a face of the complex")]
    NotAFace(VertexSet),

    #[error("edge {0}-{1} is not an edge of the graph")]
    StrayEdge(usize, usize),

    #[error(
        "ground set of {n} vertices exceeds the Hochster threshold {threshold}; \
         use the bound engine (reg_bounds) instead"
    )]
    ThresholdExceeded { n: usize, threshold: usize },

    #[error("validation gate `{gate}` failed: {detail}")]
    Gate { gate: &'static str, detail: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

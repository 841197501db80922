use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),
    #[error("undirected edge at vertex {0} is a self-loop")]
    SelfLoopEdge(VertexId),
    #[error("terminal pair {pair} has identical source and target {vertex}")]
    DegeneratePair { pair: usize, vertex: VertexId },
    #[error("orientation has {found} entries, graph has {expected} undirected edges")]
    OrientationLength { expected: usize, found: usize },
    #[error("orientation leaves edge {0} unset")]
    NotTotal(EdgeId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("exhaustive enumeration limited to {limit} undirected edges, instance has {found}")]
    EdgeLimit { limit: usize, found: usize },
    #[error("more than {cap} valid orientations")]
    CapExceeded { cap: usize },
}

/// Line-oriented parse failure; `line` and `column` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

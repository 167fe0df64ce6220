use thiserror::Error;

/// Errors raised while reading the edge-list text format. Every variant
/// carries the 1-based line number it was detected on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing vertex-count header")]
    MissingHeader,
    #[error("line {line}: bad vertex-count header {content:?}")]
    BadHeader { line: usize, content: String },
    #[error("line {line}: malformed edge line {content:?}")]
    BadLine { line: usize, content: String },
    #[error("line {line}: vertex {vertex} out of range for order {order}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        order: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
}

/// Structural errors on graphs already in memory.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    ZeroOrder,
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("edge {u} {v} already present")]
    EdgePresent { u: usize, v: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
}

/// Parameter violations in constructors, formulas and enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{context}: {reason}")]
pub struct ParamError {
    pub context: &'static str,
    pub reason: String,
}

impl ParamError {
    pub fn new(context: &'static str, reason: impl Into<String>) -> Self {
        ParamError {
            context,
            reason: reason.into(),
        }
    }
}

impl From<GraphError> for ParamError {
    fn from(e: GraphError) -> Self {
        ParamError::new("graph", e.to_string())
    }
}

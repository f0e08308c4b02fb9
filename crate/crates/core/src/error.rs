use thiserror::Error;

/// Errors surfaced by the parsers, the solvers and the fold engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("parse error at line {line}: {message}")]
    Text { line: usize, message: String },

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("invalid permutation: {0}")]
    Permutation(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("{what} limited to n <= {bound}, got n = {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    #[error("cannot fold {x} and {y}: {reason}")]
    FoldPrecondition { x: usize, y: usize, reason: String },

    #[error("k={k} outside [{lo},{hi}]")]
    OutOfRange { k: usize, lo: usize, hi: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("invalid family parameter: {0}")]
    Family(String),

    #[error("invalid coloring: {0}")]
    Coloring(String),

    #[error("invalid fold trace: {0}")]
    Trace(String),
}

impl Error {
    pub(crate) fn text(line: usize, message: impl Into<String>) -> Self {
        Error::Text {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors raised by graph parsing, cover search and classification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexRange { vertex: usize, n: usize },

    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph has {n} vertices, limit for {operation} is {limit}")]
    Size {
        operation: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("search budget of {budget} nodes exceeded in {operation}")]
    BudgetExceeded {
        operation: &'static str,
        budget: u64,
    },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    /// Two independent routes disagreed. Always an implementation bug.
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

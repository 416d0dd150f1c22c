use thiserror::Error;

/// Errors raised by the library.
///
/// Variants fall into three families that the command-line front end maps
/// onto distinct exit codes: malformed input, guard violations, and domain
/// errors in the underlying algebra.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("fragment product needs even arity, got {0}")]
    OddArity(usize),

    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("invalid fragment: {0}")]
    InvalidFragment(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("vertex {vertex} has degree {degree}, model only covers degree <= {max_degree}")]
    DegreeOverflow {
        vertex: usize,
        degree: usize,
        max_degree: usize,
    },

    #[error("{what}: {actual} exceeds guard {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("parameter must be real: {0}")]
    NonRealParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn guard(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::GuardExceeded {
            what,
            limit,
            actual,
        }
    }

    /// True for errors caused by a size guard rather than bad input.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

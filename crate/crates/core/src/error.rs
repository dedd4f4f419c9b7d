use thiserror::Error;

/// Errors raised by graph construction, parsing, and the formula layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("malformed graph6 input: {0}")]
    Graph6(String),

    #[error("invalid part specification: {0}")]
    PartSpec(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("filter does not match the hypotheses of {theorem}: {reason}")]
    HypothesisMismatch { theorem: String, reason: String },

    #[error("line {line}: {message}")]
    Stream { line: usize, message: String },

    #[error("enumeration of order {0} is not supported (at most {max} vertices)", max = crate::verify::MAX_ENUMERATION_ORDER)]
    EnumerationTooLarge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

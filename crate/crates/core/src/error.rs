use thiserror::Error;

use crate::order::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("CyclicInput: the digraph contains a directed cycle")]
    CyclicInput,
    #[error("VertexSetMismatch: {0}")]
    VertexSetMismatch(String),
    #[error("NotLinearExtension: chain places {0} after {1} but the digraph orders {1} before {0}")]
    NotLinearExtension(Vertex, Vertex),
    #[error("NonPositiveSize: level {level} has size {size}, sizes must be at least 1")]
    NonPositiveSize { level: usize, size: u64 },
    #[error("IndexOutOfRange: level {level} requested but the sequence has only {len} entries")]
    IndexOutOfRange { level: usize, len: usize },
    #[error("SizeOverflow: level {level} size does not fit in a machine word")]
    SizeOverflow { level: usize },
    #[error("TooLarge: {size} elements exceeds the limit of {max} for this operation")]
    TooLarge { size: usize, max: usize },
    #[error("InvalidVertex: position must be at least 1 (got {position},{level})")]
    InvalidVertex { position: usize, level: usize },
    #[error("UnknownVertex: {0} is not in the vertex set")]
    UnknownVertex(Vertex),
    #[error("DuplicateVertex: {0} listed more than once")]
    DuplicateVertex(Vertex),
    #[error("Loop: arc {0} -> {0} is a loop")]
    Loop(Vertex),
    #[error("DuplicateArc: arc {0} -> {1} listed more than once")]
    DuplicateArc(Vertex, Vertex),
    #[error("NotPartialOrder: {0}")]
    NotPartialOrder(String),
    #[error("Parse: line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("Parse: {0}")]
    Format(String),
}

impl Error {
    /// Errors that come from a level-size sequence rather than from graph input.
    pub fn is_sequence_error(&self) -> bool {
        matches!(
            self,
            Error::NonPositiveSize { .. } | Error::IndexOutOfRange { .. } | Error::SizeOverflow { .. }
        )
    }
}

//! Error type shared by the library.

use thiserror::Error;

/// Errors reported by parsing and precondition checks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported type `{0}`: expected A<n> (n≥1), D<n> (n≥4) or E6/E7/E8")]
    UnsupportedType(String),
    #[error("vertex {vertex} out of range for rank {rank}")]
    VertexOutOfRange { vertex: usize, rank: usize },
    #[error("invalid braid word: {0}")]
    InvalidWord(String),
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An edge list or head vector does not describe a tree.
    #[error("invalid tree: {0}")]
    InvalidTree(String),

    /// A vertex id outside 1..=n was supplied.
    #[error("unknown vertex {vertex} (tree has {n} vertices)")]
    UnknownVertex { vertex: usize, n: usize },

    /// A score is undefined for the given input (e.g. a single-vertex tree).
    #[error("score undefined: {0}")]
    UndefinedScore(String),

    /// A malformed line in a head-vector file.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A malformed sentence in a CoNLL-U file.
    #[error("sentence {id}: {message}")]
    Sentence { id: String, message: String },

    /// Any other invalid argument.
    #[error("{0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

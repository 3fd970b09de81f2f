//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("ill-defined module map: image of relation {index} is not a relation: {detail}")]
    IllDefinedMap { index: usize, detail: String },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal arithmetic error: {0}")]
    Internal(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("semantic error in statement {index}: {msg}")]
    Semantic { index: usize, msg: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

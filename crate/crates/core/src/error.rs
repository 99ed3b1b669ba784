use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("no trivial power map found up to n = {cap}")]
    CapExceeded { cap: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("cache I/O: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;

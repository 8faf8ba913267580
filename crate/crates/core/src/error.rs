use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid binary word: {0}")]
    InvalidWord(String),

    #[error("composition {0} is not admissible")]
    NotAdmissible(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no preimage under mu: {0}")]
    NoPreimage(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("oracle capability exceeded: {0}")]
    Capability(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

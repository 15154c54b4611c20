use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("packing already covers every vertex; nothing left to add")]
    NoExtension,
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("format error at line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("unsupported order {order}: {msg}")]
    UnsupportedOrder { order: usize, msg: String },

    /// Construction would exceed the configured size cap.
    #[error("resource cap exceeded: d = {d} is above the cap {cap} (raise it explicitly to override)")]
    ResourceCap { d: usize, cap: usize },

    #[error("Latin-square pair is not certified orthogonal")]
    CertificationRequired,
}

impl Error {
    pub(crate) fn format(line: usize, msg: impl Into<String>) -> Self {
        Error::Format {
            line,
            msg: msg.into(),
        }
    }
}

//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {context}: expected {expected:?}, got {actual:?}")]
    ShapeMismatch {
        context: String,
        expected: Vec<usize>,
        actual: Vec<usize>,
    },

    #[error("invalid network spec: {0}")]
    InvalidSpec(String),

    #[error("label {label} out of range for {num_labels} classes")]
    LabelOutOfRange { label: usize, num_labels: usize },

    #[error("empty dataset: {0}")]
    EmptyDataset(String),

    #[error("unsupported configuration: {0}")]
    UnsupportedConfig(String),

    #[error("non-finite value in {0}")]
    NonFinite(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("IDX magic mismatch: expected {expected:#010x}, found {found:#010x}")]
    IdxWrongMagic { expected: u32, found: u32 },

    #[error("IDX payload truncated: {0}")]
    IdxTruncated(String),

    #[error("IDX image/label count mismatch: {images} images vs {labels} labels")]
    IdxCountMismatch { images: usize, labels: usize },

    #[error("malformed {kind}: {detail}")]
    Format { kind: String, detail: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("cache mismatch: {0}")]
    CacheMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn shape(context: impl Into<String>, expected: &[usize], actual: &[usize]) -> Self {
        Error::ShapeMismatch {
            context: context.into(),
            expected: expected.to_vec(),
            actual: actual.to_vec(),
        }
    }

    pub fn format(kind: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Format {
            kind: kind.into(),
            detail: detail.into(),
        }
    }
}

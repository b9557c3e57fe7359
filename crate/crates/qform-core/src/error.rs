use thiserror::Error;

/// Errors produced by form construction and the enumeration engines.
#[derive(Debug, Error)]
pub enum QFormError {
    #[error("gram matrix is not symmetric")]
    NotSymmetric,

    #[error("gram matrix is not square (row {row} has length {len}, expected {dim})")]
    NotSquare { row: usize, len: usize, dim: usize },

    #[error("form is not positive definite (leading principal minor {index} is {value})")]
    NotPositiveDefinite { index: usize, value: i128 },

    #[error("dimension mismatch: form has dim {dim}, vector has length {len}")]
    DimensionMismatch { dim: usize, len: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("resource cap exceeded: {what} (estimated {estimate:.3e}, cap {cap:.3e})")]
    ResourceCap {
        what: &'static str,
        estimate: f64,
        cap: f64,
    },

    #[error("prime {p} divides 2N = {two_n}; character is undefined there")]
    CharacterUndefined { p: u64, two_n: u64 },

    #[error("invalid form data: {0}")]
    Invalid(String),

    #[error("serialization: {0}")]
    Serde(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, QFormError>;

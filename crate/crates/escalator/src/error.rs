use thiserror::Error;

#[derive(Debug, Error)]
pub enum EscalateError {
    #[error("escalation past dimension {0} is not supported")]
    DimensionCap(usize),
    #[error("forms passed to dedup must share a dimension (saw {0} and {1})")]
    MixedDimensions(usize, usize),
    #[error(transparent)]
    Form(#[from] qform_core::QFormError),
    #[error(transparent)]
    Serde(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, EscalateError>;

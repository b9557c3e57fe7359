use thiserror::Error;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("constant {name} is not a valid rational: {text}")]
    BadConstant { name: &'static str, text: String },
    #[error("a_E needs a positive target, got {0}")]
    BadTarget(u64),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, BoundsError>;

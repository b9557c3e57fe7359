use thiserror::Error;

#[derive(Debug, Error)]
pub enum DensityError {
    #[error("the reduction-map machinery is quaternary only (got dimension {0})")]
    UnsupportedDim(usize),
    #[error("direct enumeration of p^{{4v}} = {size:.3e} vectors exceeds the cap {cap:.3e}; use the reduction maps")]
    ResourceCap { size: f64, cap: f64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error(transparent)]
    Form(#[from] qform_core::QFormError),
}

pub type Result<T> = std::result::Result<T, DensityError>;

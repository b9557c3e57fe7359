use local_densities::DensityError;
use qform_core::QFormError;

/// Errors produced while hunting split local covers or running the
/// boolean-theta representation checks.
#[derive(Debug, thiserror::Error)]
pub enum CheckError {
    #[error("split local covers require a quaternary form, got dimension {dim}")]
    NotQuaternary { dim: usize },

    #[error("boolean theta requires a ternary form, got dimension {dim}")]
    NotTernary { dim: usize },

    #[error("no split local cover found with d <= {d_cap}")]
    NoCover { d_cap: u64 },

    #[error("bitset would need {bits} bits, cap is {cap}")]
    BitsetCap { bits: u64, cap: u64 },

    #[error("bitset belongs to a different ternary form (expected hash {expected:#018x}, found {found:#018x})")]
    HashMismatch { expected: u64, found: u64 },

    #[error("no ternary vector attains remainder {remainder} for value {value}")]
    WitnessGap { value: u64, remainder: u64 },

    #[error("bad magic bytes, expected BTH1")]
    BadMagic,

    #[error("unknown bitset mode byte {0}")]
    BadMode(u8),

    #[error("bitset payload has {found} bytes, header promised {expected}")]
    Truncated { expected: usize, found: usize },

    #[error(transparent)]
    Core(#[from] QFormError),

    #[error(transparent)]
    Local(#[from] DensityError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CheckError>;

//! Error types for eligible-number generation.

use thiserror::Error;

/// Errors produced while enumerating eligible numbers.
#[derive(Debug, Error)]
pub enum EngineError {
    /// The session would materialize more squarefree eligible numbers than
    /// the resource cap allows.  Thresholds that loose are outside the
    /// engine's remit; the caller gets an explicit refusal instead of an
    /// open-ended allocation.
    #[error("more than {cap} squarefree eligible numbers; threshold too loose for this engine")]
    ResourceCap { cap: u64 },
    /// A candidate product no longer fits in 64 bits.  The guard multiplies
    /// in 128-bit and refuses rather than wrapping.
    #[error("eligible product {value} * {prime} overflows the 64-bit guard")]
    Overflow { value: u64, prime: u64 },
    /// An eligible-number file did not start with the `ELG1` magic.
    #[error("bad magic bytes; not an ELG1 eligible-number file")]
    BadMagic,
    /// An eligible-number file ended mid-word.
    #[error("truncated ELG1 payload: {trailing} trailing bytes after the last full word")]
    Truncated { trailing: usize },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, EngineError>;

/// Error wrapper for the closure loop, which interleaves engine work with an
/// externally supplied representability checker.
#[derive(Debug, Error)]
pub enum ClosureError<E> {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("representability checker failed: {0}")]
    Checker(E),
}

//! Local (p-adic) analysis of positive definite quaternary forms: Jordan
//! splittings over Z_p, typed solution counts modulo prime powers, the exact
//! local density recursion β_p(m), Hasse invariants, and a memoized
//! local-representability oracle.
//!
//! All density arithmetic is exact (`num-rational`); floating point appears
//! only in display helpers. Counting routines enumerate at most a capped number of
//! lattice points and return a resource error beyond that instead of
//! silently degrading.

mod count;
mod density;
mod error;
mod hasse;
mod jordan;
mod local;

pub use count::{count_mod, SolutionType, DEFAULT_COUNT_CAP};
pub use density::{local_density, local_density_report, PrimeCtx, PrimeDensity};
pub use error::{DensityError, Result};
pub use hasse::{
    anisotropic_primes, diagonal_square_classes, hasse_invariant, hilbert_symbol, is_padic_square,
};
pub use jordan::{jordan_decompose, Jordan, JordanBlock};
pub use local::{
    beta_infinity, density_report, is_locally_represented, BetaInfinity, DensityReport,
    LocalAnalysis,
};

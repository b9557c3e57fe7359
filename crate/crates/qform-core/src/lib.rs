//! Exact arithmetic for classically integral positive definite quadratic
//! forms: Gram matrices, invariants (determinant, level, character),
//! representation counts by exhaustive lattice-point enumeration, reduction,
//! canonical class representatives, and a complete equivalence test.
//!
//! Everything here is exact. Floating point appears only inside the theta
//! walker to *size* search intervals; membership of every lattice point is
//! decided in integer arithmetic, so counts are never approximate.

mod equiv;
mod error;
mod exceptions;
mod form;
mod io;
mod reduce;
mod theta;

pub use equiv::{is_equivalent, isometry};
pub use error::{QFormError, Result};
pub use exceptions::{ExceptionSet, TRUANT_CAP};
pub use form::{kronecker, QuadForm};
pub use io::{form_from_json, form_from_path, form_to_json, write_theta_csv, FormJson};
pub use reduce::{canonical, greedy_reduce};

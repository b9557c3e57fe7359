//! Exact Eisenstein-side arithmetic for the Halmos form: closed-form local
//! factors, the coefficient a_E(m), the lower-bound floor, the cusp-form
//! gap bound, and the analytic constants as loadable exact rationals.

mod bounds;
mod error;
mod factor;
mod series;

pub use bounds::{b_squared, b_squared_prime, BoundConstants};
pub use error::{BoundsError, Result};
pub use factor::{factorize, is_prime, is_squarefree, tau, tau_from_factors};
pub use series::{a_e_halmos, beta13, beta2, beta7, chi, generic_factor};

use qform_core::QuadForm;

/// Level of the Halmos form.
pub const HALMOS_LEVEL: u64 = 728;
/// Determinant of the Halmos form.
pub const HALMOS_DET: u64 = 182;

/// x² + 2y² + 7z² + 13w².
pub fn halmos_form() -> QuadForm {
    QuadForm::diagonal(&[1, 2, 7, 13]).expect("fixed positive diagonal")
}

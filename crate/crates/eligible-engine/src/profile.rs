//! The arithmetic profile of a form: everything `B` depends on.
//!
//! For a quaternary form of level `N` and discriminant-character χ, the
//! quality measure of a target `m` is
//!
//! ```text
//!     B(m) = (√m′ / τ(m)) · ∏ (p−1)/(p+1),
//! ```
//!
//! where `m′` is `m` stripped of its anisotropic prime parts, `τ` is the
//! divisor count, and the product runs over primes `p | m` with `p ∤ N` and
//! `χ(p) = −1`.  A number can only slip past the Eisenstein lower bound when
//! `B(m)` is small, so thresholds on `B` turn the infinite representability
//! question into a finite search.
//!
//! Everything here is exact: we work with `B(m)²`, which is rational, and
//! never round.  A borderline candidate is therefore classified correctly
//! instead of "safely"; directed rounding would only matter if we left exact
//! arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use qform_core::kronecker;

/// Level, character, and anisotropy data driving the `B` measure.
///
/// For the Halmos form `x² + 2y² + 7z² + 13w²` this is level 728 and
/// character `(182/·)` with no anisotropic primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormProfile {
    /// Level `N` of the form; primes dividing `N` never contribute a
    /// character factor.
    pub level: u64,
    /// χ is the Kronecker symbol `(chi_disc / ·)`.
    pub chi_disc: i128,
    /// Primes at which the form is anisotropic over `Q_p`, sorted.
    pub anisotropic: Vec<u64>,
}

impl FormProfile {
    pub fn new(level: u64, chi_disc: i128, mut anisotropic: Vec<u64>) -> Self {
        anisotropic.sort_unstable();
        anisotropic.dedup();
        FormProfile {
            level,
            chi_disc,
            anisotropic,
        }
    }

    /// Profile of the Halmos form `x² + 2y² + 7z² + 13w²`.
    pub fn halmos() -> Self {
        FormProfile::new(728, 182, Vec::new())
    }

    /// χ(p) as a Kronecker symbol value in {−1, 0, +1}.
    pub fn chi(&self, p: u64) -> i32 {
        kronecker(self.chi_disc, p as i128)
    }

    pub fn is_anisotropic(&self, p: u64) -> bool {
        self.anisotropic.binary_search(&p).is_ok()
    }

    /// Does `p` contribute the `(p−1)/(p+1)` character factor?
    fn has_character_factor(&self, p: u64) -> bool {
        self.level % p != 0 && self.chi(p) == -1
    }

    /// `B(p)²` for a prime `p`, exactly.
    ///
    /// From the definition: `p/4` when `p` is isotropic with trivial
    /// character contribution, an extra `((p−1)/(p+1))²` when `χ(p) = −1`
    /// and `p ∤ N`, and `1/4` in place of `p/4` when `p` is anisotropic
    /// (the anisotropic part of `m` is stripped from `m′`).
    pub fn b_squared_prime(&self, p: u64) -> BigRational {
        self.b_squared(&[(p, 1)])
    }

    /// `B(m)²` from the factorization of `m`, exactly.
    pub fn b_squared(&self, factors: &[(u64, u32)]) -> BigRational {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for &(p, e) in factors {
            // τ(m) counts every prime, anisotropic or not.
            den *= BigInt::from(e + 1) * BigInt::from(e + 1);
            if !self.is_anisotropic(p) {
                num *= BigInt::from(p).pow(e);
            }
            if self.has_character_factor(p) {
                num *= BigInt::from(p - 1) * BigInt::from(p - 1);
                den *= BigInt::from(p + 1) * BigInt::from(p + 1);
            }
        }
        BigRational::new(num, den)
    }

    /// `C_B²`: the product of `B(p)²` over the primes where `B(p) < 1`.
    ///
    /// Dividing the number threshold by `C_B` gives the prime threshold:
    /// a prime may join an eligible product even when `B(p)` alone exceeds
    /// `C_f/C_E`, because the sub-unit primes can pull the product back
    /// down.  Only finitely many primes have `B(p) < 1`: isotropic primes
    /// satisfy `B(p)² ≥ p(p−1)²/(4(p+1)²) ≥ 1` once `p ≥ 11`, and
    /// anisotropic primes all qualify.
    pub fn c_b_squared(&self) -> BigRational {
        let mut product = BigRational::one();
        let mut seen: Vec<u64> = vec![2, 3, 5, 7];
        seen.extend_from_slice(&self.anisotropic);
        seen.sort_unstable();
        seen.dedup();
        for p in seen {
            let b2 = self.b_squared_prime(p);
            if b2 < BigRational::one() {
                product *= b2;
            }
        }
        product
    }
}

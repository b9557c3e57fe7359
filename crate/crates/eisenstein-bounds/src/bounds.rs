//! The two sides of the representation inequality for the Halmos form:
//! the Eisenstein lower bound a_E(m) ≥ C_E·m·∏(p−1)/(p+1) over primes
//! p | m with χ(p) = −1 (p ∤ 728), and the cusp-form upper bound
//! |r(m) − a_E(m)| ≤ C_f·√m·τ(m). Constants are exact rationals loaded
//! from fixtures; comparisons against the √m side are done squared so no
//! floating point enters a verdict.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Deserialize;

use crate::error::{BoundsError, Result};
use crate::factor::{factorize, tau};
use crate::series::{a_e_halmos, chi, rat};

/// Exact analytic constants for one form.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundConstants {
    /// Cusp-form coefficient bound: |r(m) − a_E(m)| ≤ C_f √m τ(m).
    pub c_f: BigRational,
    /// Eisenstein floor: a_E(m) ≥ C_E·m·∏(p−1)/(p+1).
    pub c_e: BigRational,
    /// ∏ B(p)² over the small primes with B(p) < 1 (C_B² in the text).
    pub c_b_squared: BigRational,
}

#[derive(Deserialize)]
struct RawConstants {
    c_f: serde_json::Number,
    c_e: String,
    c_b_squared: String,
}

impl BoundConstants {
    /// The published Halmos constants: C_f = 13.4964, C_E = 36/71,
    /// C_B² = 5/96.
    pub fn halmos() -> Self {
        BoundConstants {
            c_f: rat(134_964, 10_000),
            c_e: rat(36, 71),
            c_b_squared: rat(5, 96),
        }
    }

    /// Same floor and C_B, different cusp constant.
    pub fn with_c_f(&self, c_f: BigRational) -> Self {
        BoundConstants {
            c_f,
            ..self.clone()
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: RawConstants = serde_json::from_str(text)?;
        Ok(BoundConstants {
            c_f: parse_decimal(raw.c_f.to_string().as_str(), "c_f")?,
            c_e: parse_ratio(&raw.c_e, "c_e")?,
            c_b_squared: parse_ratio(&raw.c_b_squared, "c_b_squared")?,
        })
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    /// (C_f/C_E)² — squarefree numbers stay eligible while B(m)² is below.
    pub fn threshold_number_squared(&self) -> BigRational {
        let t = &self.c_f / &self.c_e;
        &t * &t
    }

    /// (C_f/(C_E·C_B))² — a prime can appear in an eligible number only if
    /// B(p)² is below this.
    pub fn threshold_prime_squared(&self) -> BigRational {
        self.threshold_number_squared() / &self.c_b_squared
    }

    /// C_E · m · ∏_{p | m, p ∤ 728, χ(p) = −1} (p−1)/(p+1), the exact
    /// Eisenstein floor.
    pub fn eisenstein_lower_bound(&self, m: u64) -> BigRational {
        let mut val = &self.c_e * BigRational::from(BigInt::from(m));
        for (p, _) in factorize(m) {
            if 728 % p != 0 && chi(p) == -1 {
                val *= rat(p as i64 - 1, p as i64 + 1);
            }
        }
        val
    }

    /// (C_f √m τ(m))², exact.
    pub fn cusp_bound_squared(&self, m: u64) -> BigRational {
        let t = tau(m);
        &self.c_f * &self.c_f * BigRational::from(BigInt::from(m) * t * t)
    }

    /// |r(m) − a_E(m)| ≤ C_f √m τ(m), compared squared.
    pub fn representation_gap_ok(&self, r: u64, m: u64) -> Result<bool> {
        let gap = BigRational::from(BigInt::from(r)) - a_e_halmos(m)?;
        Ok(&gap * &gap <= self.cusp_bound_squared(m))
    }

    /// Smallest admissible count: a_E(m) − C_f √m τ(m) > 0 guarantees a
    /// representation outright. True means guaranteed.
    pub fn forces_representation(&self, m: u64) -> Result<bool> {
        let a = a_e_halmos(m)?;
        if !a.is_positive() {
            return Ok(false);
        }
        Ok(&a * &a > self.cusp_bound_squared(m))
    }
}

fn parse_ratio(text: &str, name: &'static str) -> Result<BigRational> {
    let bad = || BoundsError::BadConstant {
        name,
        text: text.to_string(),
    };
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => parse_decimal(text, name),
    }
}

/// Decimal literal → exact rational (digits over a power of ten).
pub(crate) fn parse_decimal(text: &str, name: &'static str) -> Result<BigRational> {
    let bad = || BoundsError::BadConstant {
        name,
        text: text.to_string(),
    };
    let t = text.trim();
    if t.contains(['e', 'E']) {
        return Err(bad());
    }
    match t.split_once('.') {
        None => Ok(BigRational::from(t.parse::<BigInt>().map_err(|_| bad())?)),
        Some((int, frac)) => {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let negative = int.trim_start().starts_with('-');
            let whole: BigInt = int.parse().map_err(|_| bad())?;
            let num: BigInt = frac.parse().map_err(|_| bad())?;
            let den = BigInt::from(10u32).pow(frac.len() as u32);
            let frac_part = BigRational::new(num, den);
            let whole = BigRational::from(whole);
            Ok(if negative {
                whole - frac_part
            } else {
                whole + frac_part
            })
        }
    }
}

/// B(p)² for a single prime: p/4, with the character factor ((p−1)/(p+1))²
/// when p ∤ 728 and χ(p) = −1. The Halmos form has no anisotropic primes,
/// so no further correction applies.
pub fn b_squared_prime(p: u64) -> BigRational {
    let mut b = rat(p as i64, 4);
    if 728 % p != 0 && chi(p) == -1 {
        let f = rat(p as i64 - 1, p as i64 + 1);
        b *= &f * &f;
    }
    b
}

/// B(m)² from a factorization: m/τ(m)² times the same character factors.
pub fn b_squared(factors: &[(u64, u32)]) -> BigRational {
    let mut m = BigInt::one();
    let mut tau = BigInt::one();
    for &(p, e) in factors {
        m *= BigInt::from(p).pow(e);
        tau *= BigInt::from(e + 1);
    }
    let mut b = BigRational::new(m, &tau * &tau);
    for &(p, _) in factors {
        if 728 % p != 0 && chi(p) == -1 {
            let f = rat(p as i64 - 1, p as i64 + 1);
            b *= &f * &f;
        }
    }
    b
}

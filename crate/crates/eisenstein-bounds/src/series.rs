//! The Eisenstein coefficients a_E(m) of the Halmos form x²+2y²+7z²+13w²,
//! assembled from closed-form local factors.
//!
//! a_E(m) = (182·m/213) · β₂(m) β₇(m) β₁₃(m) · ∏_{p | m, p ∤ 728} f_p(m),
//! where f_p = β_p · p²/(p² − χ(p)) is the local density relative to its
//! value at units and χ = (182 | ·). Everything is an exact rational; the
//! L-value identity L(2, χ) = 213·√182·π²/182² is what collapses the
//! archimedean factor and the unit Euler product into the 182/213 front.

use crate::error::{BoundsError, Result};
use crate::factor::factorize;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use qform_core::kronecker;

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn big_pow(p: u64, e: u32) -> BigInt {
    BigInt::from(p).pow(e)
}

/// Σ_{i=0}^{terms-1} q^{-i} with q = p², exact.
fn geo(p: u64, terms: u32) -> BigRational {
    let mut acc = BigRational::zero();
    for i in 0..terms {
        acc += BigRational::new(BigInt::one(), big_pow(p, 2 * i));
    }
    acc
}

fn ord(mut m: u64, p: u64) -> (u32, u64) {
    let mut e = 0;
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (e, m)
}

/// β₂(m) for the Halmos form.
pub fn beta2(m: u64) -> BigRational {
    assert!(m >= 1);
    let (e, u) = ord(m, 2);
    let k = e / 2;
    if e % 2 == 0 {
        let tail = if u % 8 == 1 || u % 8 == 3 { rat(3, 4) } else { rat(5, 4) };
        rat(3, 4) * geo(2, k) + tail * BigRational::new(BigInt::one(), big_pow(2, 2 * k))
    } else {
        let tail = if u % 8 == 1 || u % 8 == 3 { rat(3, 4) } else { rat(1, 4) };
        rat(3, 4) * geo(2, k + 1) + tail * BigRational::new(BigInt::one(), big_pow(2, 2 * k + 1))
    }
}

/// β₇(m) for the Halmos form.
pub fn beta7(m: u64) -> BigRational {
    assert!(m >= 1);
    let (e, u) = ord(m, 7);
    let k = e / 2;
    let qr = kronecker(u as i128, 7) == 1;
    if e % 2 == 0 {
        let tail = if qr { rat(8, 7) } else { rat(6, 7) };
        rat(48, 49) * geo(7, k) + tail * BigRational::new(BigInt::one(), big_pow(7, 2 * k))
    } else {
        let tail = if qr { rat(2, 7) } else { BigRational::zero() };
        rat(48, 49) * geo(7, k + 1) + tail * BigRational::new(BigInt::one(), big_pow(7, 2 * k + 1))
    }
}

/// β₁₃(m) for the Halmos form.
pub fn beta13(m: u64) -> BigRational {
    assert!(m >= 1);
    let (e, u) = ord(m, 13);
    let k = e / 2;
    let qr = kronecker(u as i128, 13) == 1;
    if e % 2 == 0 {
        let tail = if qr { rat(14, 13) } else { rat(12, 13) };
        rat(168, 169) * geo(13, k) + tail * BigRational::new(BigInt::one(), big_pow(13, 2 * k))
    } else {
        let tail = if qr { rat(2, 13) } else { BigRational::zero() };
        rat(168, 169) * geo(13, k + 1) + tail * BigRational::new(BigInt::one(), big_pow(13, 2 * k + 1))
    }
}

/// χ(p) = (182 | p) for p ∤ 2·7·13.
pub fn chi(p: u64) -> i32 {
    kronecker(182, p as i128)
}

/// Relative local factor f_p(p^e·u) = β_p · p²/(p² − χ) at a prime p ∤ 728.
pub fn generic_factor(p: u64, e: u32, chi: i32) -> BigRational {
    assert!(chi == 1 || chi == -1);
    let k = e / 2;
    let (num, den) = if e % 2 == 0 {
        if chi == 1 {
            (big_pow(p, 2 * k + 1) - 1, (BigInt::from(p) - 1) * big_pow(p, 2 * k))
        } else {
            (big_pow(p, 2 * k + 1) + 1, (BigInt::from(p) + 1) * big_pow(p, 2 * k))
        }
    } else if chi == 1 {
        (big_pow(p, 2 * k + 2) - 1, (BigInt::from(p) - 1) * big_pow(p, 2 * k + 1))
    } else {
        (big_pow(p, 2 * k + 2) - 1, (BigInt::from(p) + 1) * big_pow(p, 2 * k + 1))
    };
    BigRational::new(num, den)
}

/// a_E(m) of the Halmos form, exact.
pub fn a_e_halmos(m: u64) -> Result<BigRational> {
    if m == 0 {
        return Err(BoundsError::BadTarget(m));
    }
    let mut val = BigRational::new(BigInt::from(182u32) * m, BigInt::from(213u32))
        * beta2(m)
        * beta7(m)
        * beta13(m);
    for (p, e) in factorize(m) {
        if 728 % p != 0 {
            val *= generic_factor(p, e, chi(p));
        }
    }
    Ok(val)
}

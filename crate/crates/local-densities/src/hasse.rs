//! Hilbert symbols, Hasse invariants, and the anisotropic-prime set of a
//! quaternary form. A quaternary space over Q_p is anisotropic exactly when
//! its determinant is a p-adic square and its Hasse invariant is
//! −(−1,−1)_p; only primes dividing 2·det can qualify.

use crate::error::{DensityError, Result};
use qform_core::{kronecker, QuadForm};

/// Hilbert symbol (a, b)_p for nonzero integers; p = 2 included.
pub fn hilbert_symbol(a: i128, b: i128, p: u64) -> i32 {
    assert!(a != 0 && b != 0);
    let (alpha, u) = split(a, p);
    let (beta, w) = split(b, p);
    let pi = p as i128;
    if p == 2 {
        let eps = |x: i128| ((x.rem_euclid(8) - 1) / 2) % 2;
        let omega = |x: i128| match x.rem_euclid(8) {
            1 | 7 => 0,
            _ => 1,
        };
        let e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        let leg = |x: i128| kronecker(x.rem_euclid(pi), pi);
        let mut r = 1;
        if alpha % 2 == 1 {
            r *= leg(w);
        }
        if beta % 2 == 1 {
            r *= leg(u);
        }
        if alpha % 2 == 1 && beta % 2 == 1 {
            r *= leg(-1);
        }
        r
    }
}

fn split(x: i128, p: u64) -> (i128, i128) {
    let pi = p as i128;
    let mut e = 0;
    let mut u = x;
    while u % pi == 0 {
        u /= pi;
        e += 1;
    }
    (e, u)
}

/// True iff x is a square in Q_p*.
pub fn is_padic_square(x: i128, p: u64) -> bool {
    assert!(x != 0);
    let (e, u) = split(x, p);
    if e % 2 != 0 {
        return false;
    }
    if p == 2 {
        u.rem_euclid(8) == 1
    } else {
        kronecker(u.rem_euclid(p as i128), p as i128) == 1
    }
}

/// Rational diagonalization by square classes: aᵢ = Mᵢ·Mᵢ₋₁ with Mᵢ the
/// leading principal minors (positive for positive definite forms).
pub fn diagonal_square_classes(form: &QuadForm) -> Vec<i128> {
    let n = form.dim();
    let mut minors = Vec::with_capacity(n + 1);
    minors.push(1i128);
    for k in 1..=n {
        minors.push(form.leading_principal(k).determinant());
    }
    (1..=n).map(|k| minors[k] * minors[k - 1]).collect()
}

/// Hasse invariant ε_p = ∏_{i<j} (aᵢ, aⱼ)_p of the diagonalized space.
pub fn hasse_invariant(form: &QuadForm, p: u64) -> i32 {
    let a = diagonal_square_classes(form);
    let mut eps = 1;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            eps *= hilbert_symbol(a[i], a[j], p);
        }
    }
    eps
}

/// Primes where the quaternary form is anisotropic over Q_p.
pub fn anisotropic_primes(form: &QuadForm) -> Result<Vec<u64>> {
    if form.dim() != 4 {
        return Err(DensityError::UnsupportedDim(form.dim()));
    }
    let det = form.determinant();
    let mut out = Vec::new();
    for p in distinct_prime_factors(2 * det as u64) {
        let square_det = is_padic_square(det, p);
        let obstructed = hasse_invariant(form, p) == -hilbert_symbol(-1, -1, p);
        if square_det && obstructed {
            out.push(p);
        }
    }
    Ok(out)
}

pub(crate) fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

//! Assembly of the local data attached to (Q, m): one density per prime of
//! interest, the archimedean factor, and the local representability verdict.
//!
//! For p ∤ 2·det·N the density is automatically positive, so representability
//! only depends on the finitely many primes dividing 2·det·N. Queries are
//! memoized on (p, ord_p(m), unit class of m modulo p^{k_p}) — the density
//! recursion only sees m through that data, so distinct m sharing a key share
//! a verdict. The unit-class precision k_p = 2·ord_p(2·det) + 1 is the
//! standard local square-class resolution for the form.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Signed;
use qform_core::QuadForm;

use crate::density::{local_density_report, PrimeCtx, PrimeDensity};
use crate::error::Result;
use crate::hasse::distinct_prime_factors;

/// The archimedean density of a positive quaternary form, kept symbolically
/// as `coefficient · π² / √det` with `coefficient = m / 2⁴⁻¹…` collapsed into
/// a single rational. Only the exact rational and the determinant are stored;
/// `approx` gives a floating evaluation for display.
#[derive(Debug, Clone, PartialEq)]
pub struct BetaInfinity {
    pub coefficient: BigRational,
    pub det: i128,
}

impl BetaInfinity {
    pub fn approx(&self) -> f64 {
        let num = rational_to_f64(&self.coefficient);
        num * std::f64::consts::PI * std::f64::consts::PI / (self.det as f64).sqrt()
    }
}

impl std::fmt::Display for BetaInfinity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})·π²/√{}", self.coefficient, self.det)
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    let mut num = r.numer().clone();
    let mut den = r.denom().clone();
    // Scale both sides down together so the individual conversions stay finite.
    let bits = num.bits().max(den.bits());
    if bits > 900 {
        let shift = (bits - 900) as u64;
        num >>= shift;
        den >>= shift;
    }
    let n: f64 = num.to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = den.to_string().parse().unwrap_or(f64::NAN);
    n / d
}

/// β∞(m) = π² m / √det for a quaternary form.
pub fn beta_infinity(form: &QuadForm, m: u64) -> BetaInfinity {
    BetaInfinity {
        coefficient: BigRational::from_integer(m.into()),
        det: form.determinant(),
    }
}

/// Everything local about one target: per-prime densities over the critical
/// primes and the combined verdict.
#[derive(Debug, Clone)]
pub struct DensityReport {
    pub m: u64,
    pub entries: Vec<PrimeDensity>,
    pub beta_infinity: BetaInfinity,
    pub locally_represented: bool,
}

/// Reusable local-representability oracle for a fixed form.
pub struct LocalAnalysis {
    form: QuadForm,
    primes: Vec<u64>,
    /// per prime: (context, p^{k_p} for the memo key)
    ctxs: Vec<(u64, PrimeCtx, u64)>,
    memo: HashMap<(u64, u32, u64), bool>,
}

impl LocalAnalysis {
    pub fn new(form: &QuadForm) -> Result<Self> {
        let det = form.determinant();
        assert!(det > 0, "positive definite forms only");
        let primes = distinct_prime_factors(2 * det as u64);
        let mut ctxs = Vec::new();
        for &p in &primes {
            let ctx = PrimeCtx::new(form, p)?;
            let kp = 2 * ord_u64(2 * det as u64, p) + 1;
            let modulus = (p as u128).pow(kp).min(u64::MAX as u128) as u64;
            ctxs.push((p, ctx, modulus));
        }
        Ok(Self {
            form: form.clone(),
            primes,
            ctxs,
            memo: HashMap::new(),
        })
    }

    pub fn critical_primes(&self) -> &[u64] {
        &self.primes
    }

    /// β_p(m) > 0 for every critical prime p. Positive m only.
    pub fn is_locally_represented(&mut self, m: u64) -> Result<bool> {
        assert!(m > 0);
        for idx in 0..self.ctxs.len() {
            let (p, modulus) = (self.ctxs[idx].0, self.ctxs[idx].2);
            let e = ord_u64(m, p);
            let unit = m / (p as u64).pow(e);
            let key = (p, e.min(64), unit % modulus);
            let verdict = match self.memo.get(&key) {
                Some(&v) => v,
                None => {
                    let beta = self.ctxs[idx].1.beta(m);
                    let v = beta.is_positive();
                    self.memo.insert(key, v);
                    v
                }
            };
            if !verdict {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Full report (exact densities, no memo short-cuts).
    pub fn report(&mut self, m: u64) -> Result<DensityReport> {
        let mut entries = Vec::new();
        let mut locally = true;
        for (_, ctx, _) in &mut self.ctxs {
            let entry = ctx.report(m);
            locally &= entry.beta.is_positive();
            entries.push(entry);
        }
        Ok(DensityReport {
            m,
            entries,
            beta_infinity: beta_infinity(&self.form, m),
            locally_represented: locally,
        })
    }
}

fn ord_u64(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    e
}

/// One-shot convenience over [`LocalAnalysis`].
pub fn is_locally_represented(form: &QuadForm, m: u64) -> Result<bool> {
    LocalAnalysis::new(form)?.is_locally_represented(m)
}

/// One-shot full report.
pub fn density_report(form: &QuadForm, m: u64) -> Result<DensityReport> {
    let det = form.determinant();
    assert!(det > 0);
    let mut entries = Vec::new();
    let mut locally = true;
    for p in distinct_prime_factors(2 * det as u64) {
        let entry = local_density_report(form, p, m)?;
        locally &= entry.beta.is_positive();
        entries.push(entry);
    }
    Ok(DensityReport {
        m,
        entries,
        beta_infinity: beta_infinity(form, m),
        locally_represented: locally,
    })
}

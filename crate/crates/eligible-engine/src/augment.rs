//! The `s·p²` augmentation round.
//!
//! Exceptions found among the squarefree eligible numbers can spawn further
//! exceptions of the form `s·p²`.  For each surviving exception `s` and
//! each eligible prime `p` we test `B(s·p²)² ≤ T²` exactly.  One shortcut
//! from the source analysis survives: for odd isotropic `p`, ineligibility
//! of `s·p` already forces ineligibility of `s·p²` (the step from `s·p` to
//! `s·p²` multiplies `B²` by `4p/9 > 1`, or `9p/16 > 1` when `p | s`), so
//! those candidates are pruned without the second evaluation.  The shortcut
//! fails for `p = 2` (`4p/9 = 8/9 < 1`) and for anisotropic `p` (the new
//! factor is stripped from `m′`), which are tested directly.

use eisenstein_bounds::factorize;
use num_rational::BigRational;

use crate::error::{EngineError, Result};
use crate::profile::FormProfile;
use crate::session::EligiblePrime;

/// Candidates `{s·p² : s ∈ exceptions, B(s·p²) ≤ C_f/C_E}`, ascending.
pub fn square_augment(
    exceptions: &[u64],
    primes: &[EligiblePrime],
    profile: &FormProfile,
    threshold_squared: &BigRational,
) -> Result<Vec<u64>> {
    let mut seeds: Vec<u64> = exceptions.to_vec();
    seeds.sort_unstable();
    seeds.dedup();

    let mut out = Vec::new();
    for &s in &seeds {
        let base = factorize(s);
        for entry in primes {
            let p = entry.prime;
            let shortcut_applies = p != 2 && !profile.is_anisotropic(p);
            if shortcut_applies {
                let once = merged(&base, p, 1);
                if profile.b_squared(&once) > *threshold_squared {
                    continue;
                }
            }
            let twice = merged(&base, p, 2);
            if profile.b_squared(&twice) <= *threshold_squared {
                out.push(checked_product(s, p)?);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Factorization of `s · pᵉ` given the factorization of `s`.
fn merged(base: &[(u64, u32)], p: u64, e: u32) -> Vec<(u64, u32)> {
    let mut factors = base.to_vec();
    match factors.iter_mut().find(|(q, _)| *q == p) {
        Some((_, exp)) => *exp += e,
        None => {
            factors.push((p, e));
            factors.sort_unstable();
        }
    }
    factors
}

fn checked_product(s: u64, p: u64) -> Result<u64> {
    let wide = u128::from(s) * u128::from(p) * u128::from(p);
    u64::try_from(wide).map_err(|_| EngineError::Overflow { value: s, prime: p })
}

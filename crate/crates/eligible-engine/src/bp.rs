//! Near-monotonicity of `B` along the primes.
//!
//! The prime scan's two-miss stopping rule rests on a small lemma: if
//! consecutive primes `p < q` satisfy `B(p) > B(q)`, then `q − p ≤ 2`.
//! The lower member of a twin pair can undercut its predecessor (the
//! `(p−1)/(p+1)` character factor costs roughly `4/p`, more than a gap-2
//! step gains), but a gap of 4 or more always grows `B`.  This module
//! checks the claim empirically over a prime range for any profile.

use num_prime::nt_funcs::primes;
use num_rational::BigRational;

use crate::profile::FormProfile;

/// A pair of consecutive primes where `B` decreases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inversion {
    pub p: u64,
    pub q: u64,
}

impl Inversion {
    pub fn gap(&self) -> u64 {
        self.q - self.p
    }
}

/// Scan all consecutive prime pairs `p < q ≤ limit` and report every
/// inversion `B(p) > B(q)`.
pub fn b_inversions(profile: &FormProfile, limit: u64) -> Vec<Inversion> {
    let ps = primes(limit);
    let mut out = Vec::new();
    let mut previous: Option<(u64, BigRational)> = None;
    for &q in &ps {
        let bq = profile.b_squared_prime(q);
        if let Some((p, bp)) = previous {
            if bp > bq {
                out.push(Inversion { p, q });
            }
        }
        previous = Some((q, bq));
    }
    out
}

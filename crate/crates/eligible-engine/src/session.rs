//! Session state: thresholds and the eligible prime list.
//!
//! A session fixes the analytic constants `(C_f, C_E, C_B)` and a form
//! profile, converts them into the two squared thresholds
//!
//! ```text
//!     T²  = (C_f/C_E)²          for numbers,
//!     Tₚ² = (C_f/(C_E·C_B))²    for primes,
//! ```
//!
//! and enumerates every prime with `B(p)² ≤ Tₚ²`.  The prime scan walks the
//! primes in natural order and stops only after two consecutive misses: `B`
//! is not quite monotone along the primes — the lower member of a twin pair
//! can beat its predecessor — but an inversion never spans a gap larger
//! than 2, so two misses in a row certify that every later prime misses too.

use eisenstein_bounds::{factorize, BoundConstants};
use num_prime::nt_funcs::next_prime;
use num_rational::BigRational;

use crate::augment;
use crate::error::Result;
use crate::profile::FormProfile;
use crate::squarefree;

/// The number of squarefree eligible numbers this engine is willing to
/// materialize.  Looser thresholds get an explicit refusal.
pub const DEFAULT_SQUAREFREE_CAP: u64 = 100_000_000;

/// A prime that may divide an eligible number, with its exact `B(p)²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EligiblePrime {
    pub prime: u64,
    pub b_squared: BigRational,
}

/// Thresholds plus the eligible prime list for one `(constants, profile)`
/// pair.
#[derive(Debug, Clone)]
pub struct EligibleSession {
    constants: BoundConstants,
    profile: FormProfile,
    threshold_number_squared: BigRational,
    threshold_prime_squared: BigRational,
    primes: Vec<EligiblePrime>,
}

impl EligibleSession {
    /// Build a session: computes both thresholds and runs the prime scan.
    pub fn new(constants: BoundConstants, profile: FormProfile) -> Self {
        let threshold_number_squared = constants.threshold_number_squared();
        let threshold_prime_squared = constants.threshold_prime_squared();
        let primes = scan_eligible_primes(&profile, &threshold_prime_squared);
        EligibleSession {
            constants,
            profile,
            threshold_number_squared,
            threshold_prime_squared,
            primes,
        }
    }

    pub fn constants(&self) -> &BoundConstants {
        &self.constants
    }

    pub fn profile(&self) -> &FormProfile {
        &self.profile
    }

    /// Eligible primes sorted by `B(p)` ascending.
    pub fn eligible_primes(&self) -> &[EligiblePrime] {
        &self.primes
    }

    /// `(C_f/C_E)²`, the squared threshold for numbers.
    pub fn number_threshold_squared(&self) -> &BigRational {
        &self.threshold_number_squared
    }

    /// `(C_f/(C_E·C_B))²`, the squared threshold for primes.
    pub fn prime_threshold_squared(&self) -> &BigRational {
        &self.threshold_prime_squared
    }

    /// Exact `B(m)²` for an arbitrary positive integer.
    pub fn b_squared_of(&self, m: u64) -> BigRational {
        self.profile.b_squared(&factorize(m))
    }

    /// All squarefree eligible numbers (including 1), ascending.
    pub fn squarefree_eligible(&self) -> Result<Vec<u64>> {
        self.squarefree_eligible_capped(DEFAULT_SQUAREFREE_CAP)
    }

    /// Same, but with an explicit resource cap on the set size.
    pub fn squarefree_eligible_capped(&self, cap: u64) -> Result<Vec<u64>> {
        squarefree::squarefree_eligible(&self.primes, &self.threshold_number_squared, cap)
    }

    /// Candidates `s·p²` for the next exception round, ascending.
    pub fn square_augment(&self, exceptions: &[u64]) -> Result<Vec<u64>> {
        augment::square_augment(
            exceptions,
            &self.primes,
            &self.profile,
            &self.threshold_number_squared,
        )
    }
}

/// Enumerate every prime with `B(p)² ≤ threshold`, sorted by `B(p)`
/// ascending.  Stops after two consecutive primes miss.
pub fn scan_eligible_primes(
    profile: &FormProfile,
    threshold_squared: &BigRational,
) -> Vec<EligiblePrime> {
    let mut out = Vec::new();
    let mut consecutive_misses = 0u32;
    let mut p = 2u64;
    loop {
        let b_squared = profile.b_squared_prime(p);
        if b_squared <= *threshold_squared {
            consecutive_misses = 0;
            out.push(EligiblePrime { prime: p, b_squared });
        } else {
            consecutive_misses += 1;
            if consecutive_misses == 2 {
                break;
            }
        }
        p = next_prime(&p, None).expect("prime scan exhausted u64");
    }
    out.sort_by(|a, b| {
        a.b_squared
            .cmp(&b.b_squared)
            .then_with(|| a.prime.cmp(&b.prime))
    });
    out
}

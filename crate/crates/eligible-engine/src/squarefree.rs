//! Squarefree eligible numbers.
//!
//! With the primes sorted by `B` ascending, every squarefree eligible
//! number is a product of distinct primes from the list, and `B²` of a
//! product is the product of the `B(p)²` (multiplicativity).  The walk
//! below visits index-increasing products depth-first.  At each step it
//! may extend the current product by the next prime `p_j`:
//!
//! * if the extended `B²` is within threshold, the product is eligible —
//!   record it and keep extending;
//! * if it is over threshold but `B(p_j)² < 1`, the product can still dip
//!   back under later (sub-unit primes pull `B` down), so extend without
//!   recording;
//! * otherwise every later extension only grows `B²` (the remaining primes
//!   all have `B² ≥ B(p_j)² ≥ 1`), and the scan of this node stops.
//!
//! This is the replacement-chain enumeration in depth-first clothing: the
//! carry structure is identical, and the output is provably the full set
//! `{m squarefree over the prime list : B(m)² ≤ T²}` — which the tests
//! additionally pin to a brute-force oracle on synthetic thresholds.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{EngineError, Result};
use crate::session::EligiblePrime;

/// Generate the full squarefree eligible set, ascending, including 1
/// (whenever `B(1) = 1` is itself within threshold).
pub fn squarefree_eligible(
    primes: &[EligiblePrime],
    threshold_squared: &BigRational,
    cap: u64,
) -> Result<Vec<u64>> {
    let one = BigRational::one();
    let mut out: Vec<u64> = Vec::new();
    if one <= *threshold_squared {
        out.push(1);
    }
    let mut walk = Walk {
        primes,
        threshold_squared,
        cap,
        out,
    };
    walk.extend(0, &one, 1)?;
    let mut out = walk.out;
    out.sort_unstable();
    Ok(out)
}

struct Walk<'a> {
    primes: &'a [EligiblePrime],
    threshold_squared: &'a BigRational,
    cap: u64,
    out: Vec<u64>,
}

impl Walk<'_> {
    fn extend(&mut self, from: usize, b_squared: &BigRational, value: u64) -> Result<()> {
        for j in from..self.primes.len() {
            let entry = &self.primes[j];
            let next_b = b_squared * &entry.b_squared;
            if next_b <= *self.threshold_squared {
                let next_value = self.checked_value(value, entry.prime)?;
                self.record(next_value)?;
                self.extend(j + 1, &next_b, next_value)?;
            } else if entry.b_squared < BigRational::one() {
                let next_value = self.checked_value(value, entry.prime)?;
                self.extend(j + 1, &next_b, next_value)?;
            } else {
                break;
            }
        }
        Ok(())
    }

    fn checked_value(&self, value: u64, prime: u64) -> Result<u64> {
        let wide = u128::from(value) * u128::from(prime);
        u64::try_from(wide).map_err(|_| EngineError::Overflow { value, prime })
    }

    fn record(&mut self, value: u64) -> Result<()> {
        if self.out.len() as u64 >= self.cap {
            return Err(EngineError::ResourceCap { cap: self.cap });
        }
        self.out.push(value);
        Ok(())
    }
}

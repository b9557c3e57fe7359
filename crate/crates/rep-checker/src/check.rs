//! Bulk representation checking through a split local cover.
//!
//! With a cover d·x² ⊥ T ⊆ Q in hand, a target a is represented by Q as
//! soon as a − d·x² lands on a set bit of T's boolean theta for some small
//! x. Scanning x downward from the largest admissible value keeps every
//! remainder inside a window of width Y ≈ 2dc√X, so one bitmap of that size
//! serves every target up to X with c slice attempts each. A miss proves
//! nothing — the cover is a sublattice — so misses are reported as
//! unresolved rather than excluded, and a retry ladder (approximate bitmap,
//! then exact bitmap, then the parent's own theta) whittles them down to
//! genuine exceptions.

use qform_core::QuadForm;

use crate::bitset::{boolean_theta, BitsetMode, RepresentedBitset};
use crate::cover::SplitLocalCover;
use crate::error::{CheckError, Result};

/// Default number of slices x to try per target.
pub const DEFAULT_ATTEMPTS: u64 = 5;

/// A target resolved as represented: value = d·x² + remainder with the
/// remainder attained by the ternary part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckedNumber {
    pub value: u64,
    pub x: u64,
    pub remainder: u64,
}

/// Result of one bitmap pass over a batch of targets.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    /// Targets hit through the cover, with their witness slice.
    pub represented: Vec<CheckedNumber>,
    /// Targets the pass could not decide (not: targets excluded).
    pub unresolved: Vec<u64>,
    /// Bitmap bound the pass used.
    pub bound: u64,
    /// Bitmap flavour the pass used.
    pub mode: BitsetMode,
}

/// Result of the full approximate → exact → parent-theta ladder.
#[derive(Debug, Clone)]
pub struct ResolveOutcome {
    /// Targets the parent form genuinely does not represent.
    pub exceptions: Vec<u64>,
    /// Targets the cheap approximate pass left open.
    pub approximate_unresolved: Vec<u64>,
    /// Targets still open after the exact pass (decided by the parent).
    pub exact_unresolved: Vec<u64>,
}

/// Y = ⌈2·d·attempts·√max_value⌉, computed exactly as ⌈√((2dc)²·X)⌉.
pub fn precision_bound(d: u64, attempts: u64, max_value: u64) -> u64 {
    let t = 2 * d as u128 * attempts as u128;
    let squared = t * t * max_value as u128;
    let root = squared.isqrt();
    let y = if root * root == squared { root } else { root + 1 };
    u64::try_from(y).expect("precision bound fits in u64")
}

/// One bitmap pass: build the boolean theta sized for the batch, then scan.
pub fn check_numbers(
    cover: &SplitLocalCover,
    numbers: &[u64],
    attempts: u64,
    mode: BitsetMode,
) -> Result<CheckOutcome> {
    let max = numbers.iter().copied().max().unwrap_or(0);
    let bound = precision_bound(cover.d, attempts, max);
    let bits = boolean_theta(&cover.ternary, bound, mode)?;
    check_against(cover, &bits, numbers, attempts)
}

/// Scan a batch against an existing bitmap (reusable across batches).
pub fn check_against(
    cover: &SplitLocalCover,
    bits: &RepresentedBitset,
    numbers: &[u64],
    attempts: u64,
) -> Result<CheckOutcome> {
    let expected = cover.ternary.fnv_hash();
    if bits.form_hash() != expected {
        return Err(CheckError::HashMismatch {
            expected,
            found: bits.form_hash(),
        });
    }
    let mut represented = Vec::new();
    let mut unresolved = Vec::new();
    for &value in numbers {
        match scan_slices(cover.d, bits, value, attempts) {
            Some(hit) => represented.push(hit),
            None => unresolved.push(value),
        }
    }
    represented.sort_unstable_by_key(|c| c.value);
    unresolved.sort_unstable();
    Ok(CheckOutcome {
        represented,
        unresolved,
        bound: bits.bound(),
        mode: bits.mode(),
    })
}

/// Try x = x_min, x_min+1, … (`attempts` of them): first x whose remainder
/// value − d·x² is a set bit wins. x_min is the least x bringing the
/// remainder under the bitmap bound; larger x shrink it further until it
/// would go negative.
fn scan_slices(
    d: u64,
    bits: &RepresentedBitset,
    value: u64,
    attempts: u64,
) -> Option<CheckedNumber> {
    let x_min = least_slice(d, value, bits.bound());
    for x in x_min..x_min.saturating_add(attempts) {
        let dx2 = d as u128 * x as u128 * x as u128;
        if dx2 > value as u128 {
            break;
        }
        let remainder = value - dx2 as u64;
        if bits.get(remainder) {
            return Some(CheckedNumber {
                value,
                x,
                remainder,
            });
        }
    }
    None
}

/// Smallest x ≥ 0 with value − d·x² ≤ bound.
fn least_slice(d: u64, value: u64, bound: u64) -> u64 {
    if value <= bound {
        return 0;
    }
    let need = (value - bound) as u128;
    let d = d as u128;
    let mut x = (need / d).isqrt();
    while d * x * x < need {
        x += 1;
    }
    while x > 0 && d * (x - 1) * (x - 1) >= need {
        x -= 1;
    }
    u64::try_from(x).expect("slice index fits in u64")
}

/// Decide the stragglers with the parent's own theta walk; returns the
/// values the parent provably does not represent, sorted.
pub fn resolve_with_full_theta(parent: &QuadForm, unresolved: &[u64]) -> Vec<u64> {
    let mut exceptions: Vec<u64> = unresolved
        .iter()
        .copied()
        .filter(|&m| !parent.is_represented(m))
        .collect();
    exceptions.sort_unstable();
    exceptions.dedup();
    exceptions
}

/// The full ladder: approximate bitmap, exact bitmap rebuilt for whatever
/// survives (a smaller batch means a smaller bitmap), then the parent's
/// theta for the last few. Everything left is a genuine exception of the
/// parent form.
pub fn resolve_numbers(
    cover: &SplitLocalCover,
    numbers: &[u64],
    attempts: u64,
) -> Result<ResolveOutcome> {
    let first = check_numbers(cover, numbers, attempts, BitsetMode::Approximate)?;
    let approximate_unresolved = first.unresolved;
    if approximate_unresolved.is_empty() {
        return Ok(ResolveOutcome {
            exceptions: Vec::new(),
            approximate_unresolved,
            exact_unresolved: Vec::new(),
        });
    }
    let second = check_numbers(cover, &approximate_unresolved, attempts, BitsetMode::Exact)?;
    let exact_unresolved = second.unresolved;
    let exceptions = resolve_with_full_theta(&cover.parent, &exact_unresolved);
    Ok(ResolveOutcome {
        exceptions,
        approximate_unresolved,
        exact_unresolved,
    })
}

/// Turn a bitmap hit into an explicit vector in the parent's coordinates,
/// re-verified against the parent form.
pub fn materialize_witness(cover: &SplitLocalCover, hit: &CheckedNumber) -> Result<Vec<i64>> {
    let slice = cover
        .ternary
        .find_representation(hit.remainder)
        .ok_or(CheckError::WitnessGap {
            value: hit.value,
            remainder: hit.remainder,
        })?;
    let x = i64::try_from(hit.x).expect("slice index fits in i64");
    let mut witness = vec![0i64; 4];
    for (coordinate, w) in witness.iter_mut().enumerate() {
        let mut acc = x as i128 * cover.embedding[0][coordinate] as i128;
        for (yi, basis_row) in slice.iter().zip(&cover.embedding[1..]) {
            acc += *yi as i128 * basis_row[coordinate] as i128;
        }
        *w = i64::try_from(acc)
            .map_err(|_| CheckError::Core(qform_core::QFormError::Overflow("witness entry")))?;
    }
    let check = cover.parent.evaluate(&witness)?;
    debug_assert_eq!(check, hit.value);
    if check != hit.value {
        return Err(CheckError::WitnessGap {
            value: hit.value,
            remainder: hit.remainder,
        });
    }
    Ok(witness)
}

//! Boolean theta series of a ternary form: one bit per value 0..=Y, set iff
//! the form attains the value. No multiplicities, no floating point — every
//! loop range is solved exactly in integers, so the exact mode misses
//! nothing and admits nothing extra.
//!
//! The enumeration eliminates variables back to front. Minimizing
//! a₁₁·Q over y₁ leaves the binary form
//! P(y₂,y₃) = (a₁₁a₂₂−a₁₂²)y₂² + 2(a₁₁a₂₃−a₁₂a₁₃)y₂y₃ + (a₁₁a₃₃−a₁₃²)y₃²,
//! and minimizing p₂₂·P over y₂ leaves a single square in y₃. Both leftovers
//! are positive definite alongside Q, so the slice ranges come from integer
//! square roots of non-negative discriminants; a final widening step absorbs
//! the floor in the root so no boundary point is dropped. The innermost loop
//! updates Q(y₁+1) − Q(y₁) = a₁₁(2y₁+1) + 2(a₁₂y₂+a₁₃y₃) incrementally.
//!
//! The approximate mode additionally clips every coordinate to a prism
//! |yᵢ| ≤ ⌈α·√(Y/λᵢ)⌉ around the origin, with λᵢ the diagonal of the
//! greedy-reduced Gram matrix. Clipping only shrinks exact ranges, so the
//! approximate bitset is a subset of the exact one by construction: a set
//! bit is always trustworthy, only clear bits need a second look.

use qform_core::{greedy_reduce, QuadForm};

use crate::error::{CheckError, Result};

/// Hard ceiling on bitset size (bits), about 1 GiB of words.
pub const DEFAULT_BITS_CAP: u64 = 1 << 33;

/// Default prism scale for the approximate mode.
pub const DEFAULT_PRISM_ALPHA: f64 = 0.6;

/// How a bitset was produced, and therefore what a clear bit means.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BitsetMode {
    /// Set bits and clear bits are both authoritative.
    Exact,
    /// Set bits are authoritative; clear bits may be false negatives.
    Approximate,
}

impl BitsetMode {
    pub(crate) fn to_byte(self) -> u8 {
        match self {
            BitsetMode::Exact => 0,
            BitsetMode::Approximate => 1,
        }
    }

    pub(crate) fn from_byte(b: u8) -> Result<Self> {
        match b {
            0 => Ok(BitsetMode::Exact),
            1 => Ok(BitsetMode::Approximate),
            other => Err(CheckError::BadMode(other)),
        }
    }
}

/// Membership bitmap for the values of one ternary form on 0..=bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentedBitset {
    bound: u64,
    mode: BitsetMode,
    form_hash: u64,
    words: Vec<u64>,
}

impl RepresentedBitset {
    fn with_capacity(bound: u64, mode: BitsetMode, form_hash: u64) -> Self {
        let words = ((bound + 1).div_ceil(64)) as usize;
        Self {
            bound,
            mode,
            form_hash,
            words: vec![0; words],
        }
    }

    pub(crate) fn from_raw(
        bound: u64,
        mode: BitsetMode,
        form_hash: u64,
        words: Vec<u64>,
    ) -> Result<Self> {
        let expected = ((bound + 1).div_ceil(64)) as usize;
        if words.len() != expected {
            return Err(CheckError::Truncated {
                expected: expected * 8,
                found: words.len() * 8,
            });
        }
        Ok(Self {
            bound,
            mode,
            form_hash,
            words,
        })
    }

    /// Largest value the bitmap covers.
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn mode(&self) -> BitsetMode {
        self.mode
    }

    /// FNV hash of the form this bitmap belongs to.
    pub fn form_hash(&self) -> u64 {
        self.form_hash
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// True iff `value` is within bounds and its bit is set.
    pub fn get(&self, value: u64) -> bool {
        if value > self.bound {
            return false;
        }
        self.words[(value / 64) as usize] >> (value % 64) & 1 == 1
    }

    fn set(&mut self, value: u64) {
        debug_assert!(value <= self.bound);
        self.words[(value / 64) as usize] |= 1 << (value % 64);
    }

    /// Number of distinct represented values in range.
    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Every set bit of `self` is set in `other` (over the shared range).
    pub fn is_subset_of(&self, other: &RepresentedBitset) -> bool {
        let shared = self.words.len().min(other.words.len());
        self.words[..shared]
            .iter()
            .zip(&other.words[..shared])
            .all(|(a, b)| a & !b == 0)
            && self.words[shared..].iter().all(|&w| w == 0)
    }
}

/// Knobs for [`boolean_theta_with`].
#[derive(Debug, Clone)]
pub struct ThetaConfig {
    /// Refuse to allocate a bitmap with more bits than this.
    pub bits_cap: u64,
    /// Prism scale for the approximate mode.
    pub alpha: f64,
}

impl Default for ThetaConfig {
    fn default() -> Self {
        Self {
            bits_cap: DEFAULT_BITS_CAP,
            alpha: DEFAULT_PRISM_ALPHA,
        }
    }
}

/// Bitmap of the values of a ternary form on 0..=bound, default knobs.
pub fn boolean_theta(form: &QuadForm, bound: u64, mode: BitsetMode) -> Result<RepresentedBitset> {
    boolean_theta_with(form, bound, mode, &ThetaConfig::default())
}

/// Bitmap of the values of a ternary form on 0..=bound.
///
/// The form is greedy-reduced first; reduction is an equivalence, so the
/// value set is unchanged while the loop ranges shrink. The stored hash is
/// that of the *input* form, which is what callers hold.
pub fn boolean_theta_with(
    form: &QuadForm,
    bound: u64,
    mode: BitsetMode,
    config: &ThetaConfig,
) -> Result<RepresentedBitset> {
    if form.dim() != 3 {
        return Err(CheckError::NotTernary { dim: form.dim() });
    }
    let bits = bound + 1;
    if bits > config.bits_cap {
        return Err(CheckError::BitsetCap {
            bits,
            cap: config.bits_cap,
        });
    }
    let reduced = greedy_reduce(form);
    let mut out = RepresentedBitset::with_capacity(bound, mode, form.fnv_hash());
    out.set(0);
    let radii = match mode {
        BitsetMode::Exact => None,
        BitsetMode::Approximate => Some(prism_radii(&reduced, bound, config.alpha)),
    };
    enumerate(&reduced, bound, radii, &mut out);
    Ok(out)
}

/// Per-coordinate radius ⌈α·√(Y/λᵢ)⌉ of the heuristic prism.
fn prism_radii(reduced: &QuadForm, bound: u64, alpha: f64) -> [i128; 3] {
    let mut radii = [0i128; 3];
    for (i, r) in radii.iter_mut().enumerate() {
        let lambda = reduced.entry(i, i).max(1) as f64;
        *r = (alpha * (bound as f64 / lambda).sqrt()).ceil() as i128;
    }
    radii
}

fn enumerate(form: &QuadForm, bound: u64, radii: Option<[i128; 3]>, out: &mut RepresentedBitset) {
    let a11 = form.entry(0, 0) as i128;
    let a12 = form.entry(0, 1) as i128;
    let a13 = form.entry(0, 2) as i128;
    let a22 = form.entry(1, 1) as i128;
    let a23 = form.entry(1, 2) as i128;
    let a33 = form.entry(2, 2) as i128;
    let y = bound as i128;

    // Binary form left over after eliminating y1 (scaled by a11 > 0).
    let p22 = a11 * a22 - a12 * a12;
    let p23 = a11 * a23 - a12 * a13;
    let p33 = a11 * a33 - a13 * a13;
    // Square left over after also eliminating y2 (scaled by p22 > 0).
    let r33 = p22 * p33 - p23 * p23;
    debug_assert!(a11 > 0 && p22 > 0 && r33 > 0, "positive definite input");

    let budget2 = a11 * y; // P(y2, y3) ≤ budget2
    let budget3 = p22 * budget2; // r33·y3² ≤ budget3

    let mut y3_hi = bounded_root(r33, budget3);
    if let Some(r) = radii {
        y3_hi = y3_hi.min(r[2]);
    }

    for y3 in 0..=y3_hi {
        // p22·y2² + 2·(p23·y3)·y2 + p33·y3² ≤ budget2
        let b2 = p23 * y3;
        let disc2 = budget2 * p22 - r33 * y3 * y3;
        debug_assert!(disc2 >= 0);
        let s2 = isqrt_i128(disc2);
        let mut lo2 = ceil_div(-b2 - s2, p22);
        let mut hi2 = floor_div(-b2 + s2, p22);
        let p_val = |y2: i128| p22 * y2 * y2 + 2 * b2 * y2 + p33 * y3 * y3;
        // The floor in s2 can clip one boundary point on each side.
        while p_val(hi2 + 1) <= budget2 {
            hi2 += 1;
        }
        while p_val(lo2 - 1) <= budget2 {
            lo2 -= 1;
        }
        if y3 == 0 {
            lo2 = lo2.max(0); // ± symmetry: the y3 = 0 slice is mirrored
        }
        if let Some(r) = radii {
            lo2 = lo2.max(-r[1]);
            hi2 = hi2.min(r[1]);
        }

        for y2 in lo2..=hi2 {
            let b1 = a12 * y2 + a13 * y3;
            let c0 = a22 * y2 * y2 + 2 * a23 * y2 * y3 + a33 * y3 * y3;
            // a11·y1² + 2·b1·y1 + c0 ≤ Y
            let disc1 = b1 * b1 - a11 * (c0 - y);
            debug_assert!(disc1 >= 0);
            let s1 = isqrt_i128(disc1);
            let mut lo1 = ceil_div(-b1 - s1, a11);
            let mut hi1 = floor_div(-b1 + s1, a11);
            let q_val = |y1: i128| a11 * y1 * y1 + 2 * b1 * y1 + c0;
            while q_val(hi1 + 1) <= y {
                hi1 += 1;
            }
            while q_val(lo1 - 1) <= y {
                lo1 -= 1;
            }
            if y3 == 0 && y2 == 0 {
                lo1 = lo1.max(0);
            }
            if let Some(r) = radii {
                lo1 = lo1.max(-r[0]);
                hi1 = hi1.min(r[0]);
            }
            if lo1 > hi1 {
                continue;
            }

            let mut val = q_val(lo1);
            let mut y1 = lo1;
            loop {
                debug_assert!((0..=y).contains(&val));
                out.set(val as u64);
                if y1 == hi1 {
                    break;
                }
                val += a11 * (2 * y1 + 1) + 2 * b1;
                y1 += 1;
            }
        }
    }
}

/// Largest t ≥ 0 with coef·t² ≤ budget (−1 when even t = 0 fails).
fn bounded_root(coef: i128, budget: i128) -> i128 {
    debug_assert!(coef > 0);
    if budget < 0 {
        return -1;
    }
    let mut t = isqrt_i128(budget / coef);
    while coef * (t + 1) * (t + 1) <= budget {
        t += 1;
    }
    while t > 0 && coef * t * t > budget {
        t -= 1;
    }
    t
}

fn isqrt_i128(n: i128) -> i128 {
    debug_assert!(n >= 0);
    (n as u128).isqrt() as i128
}

fn floor_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

fn ceil_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    -(-a).div_euclid(b)
}

#[cfg(test)]
mod unit {
    use super::*;

    #[test]
    fn division_helpers_round_the_right_way() {
        assert_eq!(floor_div(7, 2), 3);
        assert_eq!(floor_div(-7, 2), -4);
        assert_eq!(ceil_div(7, 2), 4);
        assert_eq!(ceil_div(-7, 2), -3);
        assert_eq!(ceil_div(6, 3), 2);
        assert_eq!(floor_div(6, 3), 2);
    }

    #[test]
    fn bounded_root_is_tight() {
        assert_eq!(bounded_root(1, 0), 0);
        assert_eq!(bounded_root(1, 24), 4);
        assert_eq!(bounded_root(1, 25), 5);
        assert_eq!(bounded_root(3, 26), 2);
        assert_eq!(bounded_root(3, 27), 3);
        assert_eq!(bounded_root(5, -1), -1);
    }
}

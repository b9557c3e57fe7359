//! p-adic Jordan decomposition: Q ≅ Σ_j p^{v_j} Q_j over Z_p with each Q_j
//! unimodular, computed by exact rational symmetric elimination. For odd p
//! every block is one-dimensional; for p = 2 an entry of strictly minimal
//! valuation off the diagonal forces a two-dimensional block (the xy and
//! x²+xy+y² classes).
//!
//! Blocks store small integer lifts of the unimodular parts: the lift is
//! congruent to the true unit mod p^K for a K comfortably above every level
//! this crate ever counts at, so densities computed from the lift equal the
//! true ones.

use crate::error::{DensityError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use qform_core::QuadForm;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JordanBlock {
    pub scale: u32,
    /// Unimodular part: length 1 (single entry) or 4 (2×2 row-major).
    pub gram: Vec<i64>,
}

impl JordanBlock {
    pub fn dim(&self) -> usize {
        if self.gram.len() == 1 {
            1
        } else {
            2
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Jordan {
    pub p: u64,
    pub blocks: Vec<JordanBlock>,
}

impl Jordan {
    pub fn dim(&self) -> usize {
        self.blocks.iter().map(JordanBlock::dim).sum()
    }

    /// Block indices at scale 0, scale 1, and scale ≥ 2.
    pub fn s_sets(&self) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
        let mut s = (Vec::new(), Vec::new(), Vec::new());
        for (i, b) in self.blocks.iter().enumerate() {
            match b.scale {
                0 => s.0.push(i),
                1 => s.1.push(i),
                _ => s.2.push(i),
            }
        }
        s
    }

    /// Variable counts s₀, s₁, s₂ of the three scale classes.
    pub fn s_dims(&self) -> (usize, usize, usize) {
        let mut d = (0, 0, 0);
        for b in &self.blocks {
            match b.scale {
                0 => d.0 += b.dim(),
                1 => d.1 += b.dim(),
                _ => d.2 += b.dim(),
            }
        }
        d
    }

    /// Scale exponent of each variable, block order.
    pub fn var_scales(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.dim());
        for b in &self.blocks {
            for _ in 0..b.dim() {
                out.push(b.scale);
            }
        }
        out
    }

    /// Flat Gram of the assembled form Σ p^{v_j} Q_j with scales clamped at
    /// `clamp` (entries at scale ≥ clamp vanish mod p^clamp anyway, which is
    /// the only regime callers count in). Keeps entries inside i64.
    pub fn assemble(&self, clamp: u32) -> Vec<i64> {
        let n = self.dim();
        let mut gram = vec![0i64; n * n];
        let mut at = 0usize;
        for b in &self.blocks {
            let d = b.dim();
            let sc = pow_i64(self.p as i64, b.scale.min(clamp));
            for i in 0..d {
                for j in 0..d {
                    gram[(at + i) * n + (at + j)] = b.gram[i * d + j].saturating_mul(sc);
                }
            }
            at += d;
        }
        gram
    }
}

pub(crate) fn pow_i64(base: i64, exp: u32) -> i64 {
    base.checked_pow(exp).expect("clamped power fits i64")
}

fn ord_p(x: &BigRational, p: &BigInt) -> i64 {
    if x.is_zero() {
        return i64::MAX;
    }
    let mut ord = 0i64;
    let mut n = x.numer().abs();
    while (&n % p).is_zero() {
        n /= p;
        ord += 1;
    }
    let mut d = x.denom().abs();
    while (&d % p).is_zero() {
        d /= p;
        ord -= 1;
    }
    ord
}

/// Integer lift of a p-integral rational mod p^K, symmetric range.
fn lift(x: &BigRational, pk: &BigInt) -> i64 {
    let num = x.numer().mod_floor(pk);
    let den = x.denom().mod_floor(pk);
    let inv = mod_inverse(&den, pk).expect("denominator is a p-unit");
    let mut r = (num * inv).mod_floor(pk);
    if &r * 2 > *pk {
        r -= pk;
    }
    i64::try_from(r).expect("lift fits i64 by choice of K")
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

fn lift_exponent(p: u64) -> u32 {
    match p {
        2 => 12,
        3 => 10,
        5 | 7 | 11 | 13 => 6,
        _ if p <= 1000 => 3,
        _ => 2,
    }
}

/// Exact Jordan decomposition of `q` over Z_p.
pub fn jordan_decompose(q: &QuadForm, p: u64) -> Result<Jordan> {
    if p < 2 || (p > 2 && p % 2 == 0) {
        return Err(DensityError::NotPrime(p));
    }
    let n = q.dim();
    let pb = BigInt::from(p);
    let pk = pb.pow(lift_exponent(p));
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from(BigInt::from(q.entry(i, j))))
                .collect()
        })
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut blocks = Vec::new();

    while !active.is_empty() {
        // minimal valuation over the active submatrix, diagonal preferred
        let mut best: Option<(i64, usize, usize)> = None;
        for (ai, &i) in active.iter().enumerate() {
            for &j in &active[ai..] {
                let o = ord_p(&m[i][j], &pb);
                let better = match best {
                    None => true,
                    Some((bo, bi, bj)) => {
                        o < bo || (o == bo && i == j && bi != bj)
                    }
                };
                if better {
                    best = Some((o, i, j));
                }
            }
        }
        let (v, i, j) = best.expect("active set nonempty");
        debug_assert!(v >= 0, "integral input keeps entries p-integral");
        let scale = v as u32;
        let pv = BigRational::from(pb.pow(scale));

        if i == j {
            split_one(&mut m, &active, i);
            blocks.push(JordanBlock {
                scale,
                gram: vec![lift(&(&m[i][i] / &pv), &pk)],
            });
            active.retain(|&k| k != i);
        } else if p != 2 {
            // bring the minimal entry onto the diagonal: x_i += x_j makes
            // a_ii' = a_ii + 2a_ij + a_jj with ord exactly v (2 is a unit)
            for k in 0..n {
                let add = m[j][k].clone();
                m[i][k] += add;
            }
            for k in 0..n {
                let add = m[k][j].clone();
                m[k][i] += add;
            }
            debug_assert_eq!(ord_p(&m[i][i], &pb), v);
            split_one(&mut m, &active, i);
            blocks.push(JordanBlock {
                scale,
                gram: vec![lift(&(&m[i][i] / &pv), &pk)],
            });
            active.retain(|&k| k != i);
        } else {
            // p = 2, strictly minimal off-diagonal entry: 2-dim block
            split_two(&mut m, &active, i, j);
            let u = |r: usize, c: usize| lift(&(&m[r][c] / &pv), &pk);
            blocks.push(JordanBlock {
                scale,
                gram: vec![u(i, i), u(i, j), u(j, i), u(j, j)],
            });
            active.retain(|&k| k != i && k != j);
        }
    }

    blocks.sort_by_key(|b| b.scale);
    Ok(Jordan { p, blocks })
}

/// Clear row/column `i` against the pivot a_ii (p-integral multipliers).
fn split_one(m: &mut [Vec<BigRational>], active: &[usize], i: usize) {
    let pivot = m[i][i].clone();
    for &k in active {
        if k == i || m[i][k].is_zero() {
            continue;
        }
        let mu = &m[i][k] / &pivot;
        let n = m.len();
        for c in 0..n {
            let sub = &mu * &m[i][c];
            m[k][c] -= sub;
        }
        for r in 0..n {
            let sub = &mu * &m[r][i];
            m[r][k] -= sub;
        }
    }
}

/// Clear all rows/columns against the 2×2 pivot block at (i, j).
fn split_two(m: &mut [Vec<BigRational>], active: &[usize], i: usize, j: usize) {
    let det = &m[i][i] * &m[j][j] - &m[i][j] * &m[j][i];
    for &k in active {
        if k == i || k == j {
            continue;
        }
        // solve B mu = (a_ik, a_jk) with B the pivot block
        let mu1 = (&m[j][j] * &m[i][k] - &m[i][j] * &m[j][k]) / &det;
        let mu2 = (&m[i][i] * &m[j][k] - &m[j][i] * &m[i][k]) / &det;
        if mu1.is_zero() && mu2.is_zero() {
            continue;
        }
        let n = m.len();
        for c in 0..n {
            let sub = &mu1 * &m[i][c] + &mu2 * &m[j][c];
            m[k][c] -= sub;
        }
        for r in 0..n {
            let sub = &mu1 * &m[r][i] + &mu2 * &m[r][j];
            m[r][k] -= sub;
        }
    }
}

//! Local densities β_p(m) for quaternary forms by the Good/Zero/Bad
//! reduction maps.
//!
//! The recursion never enumerates more than (Z/8)⁴: Good-type counts are
//! closed-form character sums for odd p and a 4096-vector pass for p = 2,
//! Bad-type contributions recurse on auxiliary forms Q′ (scales +1 on S₀,
//! −1 elsewhere) and Q″ (scales −2 on S₂) with multiplicities p^{s₁+s₂-3}
//! and p^{2-s₀-s₁}, and Zero-type descends to m/p² with weight p^{-2}.
//! Everything is an exact rational.

use crate::error::{DensityError, Result};
use crate::jordan::{jordan_decompose, Jordan, JordanBlock};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use qform_core::{kronecker, QuadForm};
use std::collections::HashMap;

/// β_p(m) split into the top-level contributions. `beta` is always the sum
/// of the three parts.
#[derive(Debug, Clone)]
pub struct PrimeDensity {
    pub p: u64,
    pub m: u64,
    pub beta: BigRational,
    pub good: BigRational,
    pub bad: BigRational,
    pub zero: BigRational,
}

/// Reusable density engine for one form at one prime; memoizes the
/// reduction-map recursion across calls.
pub struct PrimeCtx {
    p: u64,
    k_base: u32,
    blocks: Vec<JordanBlock>,
    memo: HashMap<(Vec<JordanBlock>, u64, u64), BigRational>,
}

impl PrimeCtx {
    pub fn new(form: &QuadForm, p: u64) -> Result<Self> {
        if form.dim() != 4 {
            return Err(DensityError::UnsupportedDim(form.dim()));
        }
        let jordan = jordan_decompose(form, p)?;
        Ok(PrimeCtx {
            p,
            k_base: if p == 2 { 3 } else { 1 },
            blocks: jordan.blocks,
            memo: HashMap::new(),
        })
    }

    pub fn beta(&mut self, m: u64) -> BigRational {
        assert!(m >= 1);
        let blocks = self.blocks.clone();
        self.density0(&blocks, m, 0)
    }

    pub fn report(&mut self, m: u64) -> PrimeDensity {
        assert!(m >= 1);
        let blocks = self.blocks.clone();
        let p = self.p;
        let (s0, s1, s2) = var_dims(&blocks);
        let good = self.good_density(&blocks, m, 0);
        let mut bad = BigRational::zero();
        let mut zero = BigRational::zero();
        if m % p == 0 && s1 > 0 {
            let qp = bad1_form(&blocks, p);
            bad += self.ppow(s1 as i64 + s2 as i64 - 3) * self.good_density(&qp, m / p, 0);
        }
        if m % (p * p) == 0 {
            if s2 > 0 {
                let qpp = bad2_form(&blocks);
                let s2_mask = mask_of(&blocks, |b| b.scale >= 2);
                let a = self.density0(&qpp, m / (p * p), 0);
                let b = self.density0(&qpp, m / (p * p), s2_mask);
                bad += self.ppow(2 - s0 as i64 - s1 as i64) * (a - b);
            }
            zero = self.ppow(-2) * self.density0(&blocks, m / (p * p), 0);
        }
        let beta = &good + &bad + &zero;
        PrimeDensity {
            p,
            m,
            beta,
            good,
            bad,
            zero,
        }
    }

    fn ppow(&self, e: i64) -> BigRational {
        let p = BigInt::from(self.p);
        if e >= 0 {
            BigRational::from(p.pow(e as u32))
        } else {
            BigRational::new(BigInt::one(), p.pow((-e) as u32))
        }
    }

    /// The full reduction-map recursion with block subset `z` (bitmask of
    /// block indices whose variables are restricted to ≡ 0 mod p).
    fn density0(&mut self, blocks: &[JordanBlock], m: u64, z: u64) -> BigRational {
        let key = (blocks.to_vec(), m, z);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let p = self.p;
        let (s0, s1, s2) = var_dims(blocks);
        let mut total = self.good_density(blocks, m, z);
        if m % p == 0 && s1 > 0 {
            let qp = bad1_form(blocks, p);
            let z1 = z & mask_of(blocks, |b| b.scale >= 1);
            total += self.ppow(s1 as i64 + s2 as i64 - 3) * self.good_density(&qp, m / p, z1);
        }
        if m % (p * p) == 0 {
            if s2 > 0 {
                let qpp = bad2_form(blocks);
                let s2_mask = mask_of(blocks, |b| b.scale >= 2);
                let z2 = z & s2_mask;
                let a = self.density0(&qpp, m / (p * p), z2);
                let b = self.density0(&qpp, m / (p * p), s2_mask);
                total += self.ppow(2 - s0 as i64 - s1 as i64) * (a - b);
            }
            total += self.ppow(-2) * self.density0(blocks, m / (p * p), 0);
        }
        self.memo.insert(key, total.clone());
        total
    }

    /// Good-type density at the stabilized level k (1 for odd p, 3 for 2):
    /// r^{Good}_{p^k}(m, x_Z ≡ 0) / p^{3k}.
    fn good_density(&self, blocks: &[JordanBlock], m: u64, z: u64) -> BigRational {
        let p = self.p;
        if p == 2 {
            return self.good_density_two(blocks, m, z);
        }
        // odd p, k = 1: only scale-0 blocks survive mod p; Z-blocks are
        // pinned to 0, other non-scale-0 variables are free
        let mut units = Vec::new();
        let mut free_vars = 0usize;
        for (i, b) in blocks.iter().enumerate() {
            let in_z = z >> i & 1 == 1;
            if b.scale == 0 && !in_z {
                units.push(b.gram[0]);
            } else if !in_z {
                free_vars += b.dim();
            }
        }
        let n_sols = affine_count(&units, p, m % p);
        let zero_sol = u64::from(m % p == 0);
        let count = BigRational::from(BigInt::from(n_sols - zero_sol))
            * self.ppow(free_vars as i64);
        count * self.ppow(-3)
    }

    /// p = 2: direct pass over (Z/8)^dim with Z-blocks restricted to even
    /// values; Good means an odd variable in some scale-0 block.
    fn good_density_two(&self, blocks: &[JordanBlock], m: u64, z: u64) -> BigRational {
        const K: u32 = 3;
        const MD: i64 = 8;
        let dim: usize = blocks.iter().map(JordanBlock::dim).sum();
        let jordan = Jordan {
            p: 2,
            blocks: blocks.to_vec(),
        };
        let gram = jordan.assemble(K);
        // per-variable: scale-0 flag and Z-pinned flag
        let mut good_var = Vec::with_capacity(dim);
        let mut pinned = Vec::with_capacity(dim);
        for (i, b) in blocks.iter().enumerate() {
            for _ in 0..b.dim() {
                good_var.push(b.scale == 0);
                pinned.push(z >> i & 1 == 1);
            }
        }
        let target = (m % 8) as i64;
        let mut count = 0u64;
        let mut x = vec![0i64; dim];
        'outer: loop {
            let mut val = 0i64;
            let mut good = false;
            for i in 0..dim {
                if x[i] % 2 != 0 && good_var[i] {
                    good = true;
                }
                for j in 0..dim {
                    val += gram[i * dim + j] * x[i] % MD * x[j];
                }
            }
            if val.rem_euclid(MD) == target && good {
                count += 1;
            }
            for i in 0..dim {
                let step = if pinned[i] { 2 } else { 1 };
                x[i] += step;
                if x[i] < MD {
                    continue 'outer;
                }
                x[i] = 0;
            }
            break;
        }
        BigRational::from(BigInt::from(count)) * self.ppow(-(3 * K as i64))
    }

    /// Observed stabilization exponent: count_mod(Q,p,v,m)/p^{3v} equals
    /// β_p(m) for every v at or past this.
    pub fn v_stab(&self, m: u64) -> u32 {
        self.v_stab_inner(&self.blocks, m)
    }

    fn v_stab_inner(&self, blocks: &[JordanBlock], m: u64) -> u32 {
        let p = self.p;
        let (_, s1, s2) = var_dims(blocks);
        let mut vs = self.k_base;
        if m % p == 0 {
            vs = vs.max(2);
            if s1 > 0 {
                vs = vs.max(1 + self.k_base);
            }
        }
        if m % (p * p) == 0 {
            vs = vs.max(2 + self.v_stab_inner(blocks, m / (p * p)));
            if s2 > 0 {
                let qpp = bad2_form(blocks);
                vs = vs.max(2 + self.v_stab_inner(&qpp, m / (p * p)));
            }
        }
        vs
    }
}

fn var_dims(blocks: &[JordanBlock]) -> (usize, usize, usize) {
    let mut d = (0, 0, 0);
    for b in blocks {
        match b.scale {
            0 => d.0 += b.dim(),
            1 => d.1 += b.dim(),
            _ => d.2 += b.dim(),
        }
    }
    d
}

fn mask_of(blocks: &[JordanBlock], pred: impl Fn(&JordanBlock) -> bool) -> u64 {
    let mut mask = 0u64;
    for (i, b) in blocks.iter().enumerate() {
        if pred(b) {
            mask |= 1 << i;
        }
    }
    mask
}

/// Q′ of the Bad-I map: scale+1 on S₀ blocks, scale−1 on the rest.
fn bad1_form(blocks: &[JordanBlock], _p: u64) -> Vec<JordanBlock> {
    blocks
        .iter()
        .map(|b| JordanBlock {
            scale: if b.scale == 0 { 1 } else { b.scale - 1 },
            gram: b.gram.clone(),
        })
        .collect()
}

/// Q″ of the Bad-II map: scale−2 on S₂ blocks only.
fn bad2_form(blocks: &[JordanBlock]) -> Vec<JordanBlock> {
    blocks
        .iter()
        .map(|b| JordanBlock {
            scale: if b.scale >= 2 { b.scale - 2 } else { b.scale },
            gram: b.gram.clone(),
        })
        .collect()
}

/// Number of solutions of Σ uᵢxᵢ² ≡ m over F_p (odd p, all uᵢ units),
/// by the classical character-sum formulas.
fn affine_count(units: &[i64], p: u64, m: u64) -> u64 {
    let d = units.len();
    if d == 0 {
        return u64::from(m == 0);
    }
    let pi = p as i128;
    let mut delta: i128 = 1;
    for &u in units {
        delta = delta * u as i128 % pi;
    }
    let leg = |x: i128| kronecker(x.rem_euclid(pi), pi) as i128;
    let pw = |e: usize| pi.pow(e as u32);
    let val = if d % 2 == 1 {
        if m == 0 {
            pw(d - 1)
        } else {
            let sign = if (d - 1) / 2 % 2 == 1 { -1 } else { 1 };
            pw(d - 1) + pw((d - 1) / 2) * leg(sign * delta * m as i128)
        }
    } else {
        let sign = if d / 2 % 2 == 1 { -1 } else { 1 };
        let eps = leg(sign * delta);
        if m == 0 {
            pw(d - 1) + (pi - 1) * pw(d / 2 - 1) * eps
        } else {
            pw(d - 1) - pw(d / 2 - 1) * eps
        }
    };
    u64::try_from(val).expect("point counts are nonnegative")
}

/// β_p(m) for a quaternary form: one-shot convenience over [`PrimeCtx`].
pub fn local_density(form: &QuadForm, p: u64, m: u64) -> Result<BigRational> {
    Ok(PrimeCtx::new(form, p)?.beta(m))
}

/// β_p(m) with the top-level Good/Bad/Zero breakdown.
pub fn local_density_report(form: &QuadForm, p: u64, m: u64) -> Result<PrimeDensity> {
    Ok(PrimeCtx::new(form, p)?.report(m))
}

//! Exact solution counts of Q(x) ≡ m (mod p^v) by direct enumeration, with
//! the Good/Zero/Bad classification. The enumeration keeps incremental
//! partial sums so the innermost loop is constant work per vector; the cap
//! guards against p^{nv} blowing up — past it, callers must use the
//! reduction maps instead.

use crate::error::{DensityError, Result};
use crate::jordan::Jordan;
use qform_core::QuadForm;

/// Solution types of x for Q(x) ≡ m (mod p^v): `Zero` means x ≡ 0 (mod p);
/// `Good` means some variable at scale 0 is a unit; `Bad` is the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionType {
    Total,
    Good,
    Zero,
    Bad,
}

pub const DEFAULT_COUNT_CAP: f64 = 2.7e8;

/// Count solutions on an arbitrary form. `Good`/`Bad` need per-variable
/// scales, which only a Jordan decomposition provides — use
/// [`Jordan::count_mod`] for those.
pub fn count_mod(form: &QuadForm, p: u64, v: u32, m: u64, filter: SolutionType) -> Result<u64> {
    match filter {
        SolutionType::Total | SolutionType::Zero => {}
        _ => {
            return Err(DensityError::Form(qform_core::QFormError::Invalid(
                "Good/Bad counts need Jordan scale data".into(),
            )))
        }
    }
    let scales = vec![0u32; form.dim()];
    count_scaled(
        form.gram(),
        form.dim(),
        p,
        v,
        m,
        filter,
        &scales,
        DEFAULT_COUNT_CAP,
    )
}

impl Jordan {
    /// Typed count on the assembled normal form.
    pub fn count_mod(&self, v: u32, m: u64, filter: SolutionType) -> Result<u64> {
        let gram = self.assemble(v.max(1));
        count_scaled(
            &gram,
            self.dim(),
            self.p,
            v,
            m,
            filter,
            &self.var_scales(),
            DEFAULT_COUNT_CAP,
        )
    }
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn count_scaled(
    gram: &[i64],
    n: usize,
    p: u64,
    v: u32,
    m: u64,
    filter: SolutionType,
    scales: &[u32],
    cap: f64,
) -> Result<u64> {
    assert!(v >= 1, "counting needs a positive exponent");
    let pv = (p as f64).powi(v as i32);
    let size = pv.powi(n as i32);
    if size > cap {
        return Err(DensityError::ResourceCap { size, cap });
    }
    let modulus = p.pow(v);
    let target = m % modulus;
    // gram reduced into [0, modulus)
    let g: Vec<u64> = gram
        .iter()
        .map(|&e| (e.rem_euclid(modulus as i64)) as u64)
        .collect();
    let mut ctx = CountCtx {
        g: &g,
        n,
        p,
        modulus,
        target,
        filter,
        scales,
        s: vec![0; n],
        count: 0,
    };
    ctx.walk(n, 0, true, false);
    Ok(ctx.count)
}

struct CountCtx<'a> {
    g: &'a [u64],
    n: usize,
    p: u64,
    modulus: u64,
    target: u64,
    filter: SolutionType,
    scales: &'a [u32],
    /// s[i] = Σ_{j ≥ level} A_ij x_j mod modulus
    s: Vec<u64>,
    count: u64,
}

impl CountCtx<'_> {
    /// Enumerate coordinates k-1, …, 0; `qpart` is Q of the set suffix.
    fn walk(&mut self, k: usize, qpart: u64, all_div: bool, any_good: bool) {
        let md = self.modulus;
        if k == 1 {
            // innermost: a x² + 2 s x + qpart ≡ target, constant work per x
            let a = self.g[0];
            let s0 = self.s[0];
            for x in 0..md {
                let val = (qpart + ((a * x + 2 * s0) % md) * x) % md;
                if val != self.target {
                    continue;
                }
                let unit = x % self.p != 0;
                if self.accept(all_div && !unit, any_good || (unit && self.scales[0] == 0)) {
                    self.count += 1;
                }
            }
            return;
        }
        let k = k - 1;
        let a = self.g[k * self.n + k];
        for x in 0..md {
            let unit = x % self.p != 0;
            let q2 = (qpart + ((a * x + 2 * self.s[k]) % md) * x) % md;
            self.walk(
                k,
                q2,
                all_div && !unit,
                any_good || (unit && self.scales[k] == 0),
            );
            // advance partial sums by one step of x_k; md steps wrap back
            // to the starting value mod md, so no save/restore is needed
            for i in 0..k {
                self.s[i] = (self.s[i] + self.g[i * self.n + k]) % md;
            }
        }
    }

    fn accept(&self, is_zero: bool, is_good: bool) -> bool {
        match self.filter {
            SolutionType::Total => true,
            SolutionType::Zero => is_zero,
            SolutionType::Good => is_good,
            SolutionType::Bad => !is_zero && !is_good,
        }
    }
}

//! Lattice-point enumeration: exact theta coefficients, short vectors, and
//! single-value representation search.
//!
//! The enumerator walks coordinates from the last to the first. Interval
//! bounds at intermediate levels come from a floating-point LDL^t
//! decomposition padded by one unit on each side; the innermost level is
//! resolved exactly with integer arithmetic (128-bit partial sums and an
//! integer square root), so reported values and counts are exact regardless
//! of floating-point rounding.

use crate::error::{QFormError, Result};
use crate::form::QuadForm;

pub(crate) const DEFAULT_POINT_CAP: f64 = 5e10;

struct Ldl {
    n: usize,
    d: Vec<f64>,
    /// l[i*n + j] for i > j: unit lower-triangular factor.
    l: Vec<f64>,
}

fn ldl(form: &QuadForm) -> Ldl {
    let n = form.dim();
    let mut d = vec![0f64; n];
    let mut l = vec![0f64; n * n];
    for j in 0..n {
        let mut dj = form.entry(j, j) as f64;
        for k in 0..j {
            dj -= l[j * n + k] * l[j * n + k] * d[k];
        }
        d[j] = dj;
        for i in j + 1..n {
            let mut v = form.entry(i, j) as f64;
            for k in 0..j {
                v -= l[i * n + k] * l[j * n + k] * d[k];
            }
            l[i * n + j] = v / dj;
        }
    }
    Ldl { n, d, l }
}

fn ball_point_estimate(form: &QuadForm, bound: u64) -> f64 {
    let n = form.dim();
    if n == 0 || bound == 0 {
        return 1.0;
    }
    // Γ(n/2 + 1) for n = 1..6
    let gn = match n {
        1 => 0.886_226_925,
        2 => 1.0,
        3 => 1.329_340_388,
        4 => 2.0,
        5 => 3.323_350_970,
        _ => 6.0,
    };
    let det = form.determinant() as f64;
    (std::f64::consts::PI.powf(n as f64 / 2.0) * (bound as f64).powf(n as f64 / 2.0))
        / (gn * det.sqrt())
}

/// Shared recursion state.
struct Walker<'a> {
    form: &'a QuadForm,
    ldl: Ldl,
    bound: i128,
    /// s[i] = Σ_{j set} A_ij x_j, exact.
    s: Vec<i128>,
    /// Q of the partial vector (unset coordinates = 0), exact.
    qpart: i128,
    x: Vec<i64>,
}

impl<'a> Walker<'a> {
    fn new(form: &'a QuadForm, bound: u64) -> Self {
        let n = form.dim();
        Walker {
            form,
            ldl: ldl(form),
            bound: bound as i128,
            s: vec![0; n],
            qpart: 0,
            x: vec![0; n],
        }
    }

    fn set(&mut self, k: usize, v: i64) {
        let n = self.form.dim();
        self.qpart += self.form.entry(k, k) as i128 * (v as i128) * (v as i128)
            + 2 * (v as i128) * self.s[k];
        for i in 0..n {
            self.s[i] += self.form.entry(i, k) as i128 * v as i128;
        }
        self.x[k] = v;
    }

    fn unset(&mut self, k: usize) {
        let v = self.x[k];
        let n = self.form.dim();
        for i in 0..n {
            self.s[i] -= self.form.entry(i, k) as i128 * v as i128;
        }
        self.qpart -= self.form.entry(k, k) as i128 * (v as i128) * (v as i128)
            + 2 * (v as i128) * self.s[k];
        self.x[k] = 0;
    }

    /// Approximate center of coordinate k given the currently set tail.
    fn center(&self, k: usize) -> f64 {
        let n = self.ldl.n;
        let mut c = 0f64;
        for i in k + 1..n {
            c += self.ldl.l[i * n + k] * self.x[i] as f64;
        }
        c
    }

    /// Padded integer interval for coordinate k from the f64 budget.
    fn interval(&self, k: usize, budget: f64) -> (i64, i64, f64) {
        let c = self.center(k);
        let r = (budget.max(0.0) / self.ldl.d[k]).sqrt();
        let lo = (-c - r).floor() as i64 - 1;
        let hi = (-c + r).ceil() as i64 + 1;
        (lo, hi, c)
    }
}

/// Exact interval of x0 with A00·x0² + 2·s0·x0 + qpart ≤ bound, or None.
/// None also covers the case where the real interval contains no integer.
fn exact_root_interval(a00: i128, s0: i128, qpart: i128, bound: i128) -> Option<(i64, i64)> {
    let c = qpart - bound;
    let disc = s0 * s0 - a00 * c;
    if disc < 0 {
        return None;
    }
    let f = isqrt_u128(disc as u128) as i128;
    let val = |x: i128| a00 * x * x + 2 * s0 * x + c;
    // floor_div approximations are within 1 of the true endpoints; scan a
    // ±2 window for the extreme integers satisfying the exact quadratic
    let lo0 = floor_div(-s0 - f, a00);
    let hi0 = floor_div(-s0 + f, a00);
    let lo = (lo0 - 2..=lo0 + 2).find(|&x| val(x) <= 0);
    let hi = (hi0 - 2..=hi0 + 2).rev().find(|&x| val(x) <= 0);
    match (lo, hi) {
        (Some(lo), Some(hi)) if lo <= hi => Some((lo as i64, hi as i64)),
        _ => None,
    }
}

pub(crate) fn isqrt_u128(v: u128) -> u128 {
    if v == 0 {
        return 0;
    }
    let mut x = (v as f64).sqrt() as u128;
    // Newton correction
    loop {
        let better = (x + v / x.max(1)) / 2;
        if better >= x {
            break;
        }
        x = better;
    }
    while (x + 1) * (x + 1) <= v {
        x += 1;
    }
    while x * x > v {
        x -= 1;
    }
    x
}

fn floor_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    let q = a / b;
    if a % b < 0 {
        q - 1
    } else {
        q
    }
}

pub(crate) fn theta_coefficients(form: &QuadForm, bound: u64, cap: f64) -> Result<Vec<u64>> {
    let est = ball_point_estimate(form, bound);
    if est > cap {
        return Err(QFormError::ResourceCap {
            what: "theta enumeration",
            estimate: est,
            cap,
        });
    }
    let mut counts = vec![0u64; bound as usize + 1];
    counts[0] = 1;
    let n = form.dim();
    if n == 0 {
        return Ok(counts);
    }
    let mut w = Walker::new(form, bound);
    theta_rec(&mut w, n - 1, bound as f64, true, &mut counts);
    Ok(counts)
}

fn theta_rec(w: &mut Walker, k: usize, budget: f64, tail_zero: bool, counts: &mut [u64]) {
    if k == 0 {
        let a00 = w.form.entry(0, 0) as i128;
        if let Some((lo, hi)) = exact_root_interval(a00, w.s[0], w.qpart, w.bound) {
            let start = if tail_zero { 1 } else { lo as i128 };
            if start > hi as i128 {
                return;
            }
            // incremental exact values along the row
            let mut val = a00 * start * start + 2 * w.s[0] * start + w.qpart;
            let mut x = start;
            loop {
                counts[val as usize] += 2;
                if x == hi as i128 {
                    break;
                }
                val += a00 * (2 * x + 1) + 2 * w.s[0];
                x += 1;
            }
        }
        return;
    }
    let (lo, hi, c) = w.interval(k, budget);
    let lo = if tail_zero { lo.max(0) } else { lo };
    for v in lo..=hi {
        let spent = {
            let t = v as f64 + c;
            w.ldl.d[k] * t * t
        };
        let rem = budget - spent;
        // one-unit slack: the exact innermost level rejects strays
        if rem < -2.0 * w.ldl.d[k].max(1.0) - 2.0 {
            continue;
        }
        w.set(k, v);
        theta_rec(w, k - 1, rem, tail_zero && v == 0, counts);
        w.unset(k);
    }
}

pub(crate) fn short_vectors(form: &QuadForm, bound: u64) -> Result<Vec<(Vec<i64>, u64)>> {
    let est = ball_point_estimate(form, bound);
    if est > DEFAULT_POINT_CAP {
        return Err(QFormError::ResourceCap {
            what: "short-vector enumeration",
            estimate: est,
            cap: DEFAULT_POINT_CAP,
        });
    }
    let n = form.dim();
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut w = Walker::new(form, bound);
    short_rec(&mut w, n - 1, bound as f64, true, &mut out);
    out.sort();
    out.sort_by_key(|(_, v)| *v);
    Ok(out)
}

fn short_rec(w: &mut Walker, k: usize, budget: f64, tail_zero: bool, out: &mut Vec<(Vec<i64>, u64)>) {
    if k == 0 {
        let a00 = w.form.entry(0, 0) as i128;
        if let Some((lo, hi)) = exact_root_interval(a00, w.s[0], w.qpart, w.bound) {
            let start = if tail_zero { 1 } else { lo as i128 };
            let mut val = a00 * start * start + 2 * w.s[0] * start + w.qpart;
            let mut x = start;
            while x <= hi as i128 {
                if val > 0 {
                    let mut vec = w.x.clone();
                    vec[0] = x as i64;
                    out.push((vec, val as u64));
                }
                val += a00 * (2 * x + 1) + 2 * w.s[0];
                x += 1;
            }
        }
        return;
    }
    let (lo, hi, c) = w.interval(k, budget);
    let lo = if tail_zero { lo.max(0) } else { lo };
    for v in lo..=hi {
        let t = v as f64 + c;
        let rem = budget - w.ldl.d[k] * t * t;
        if rem < -2.0 * w.ldl.d[k].max(1.0) - 2.0 {
            continue;
        }
        w.set(k, v);
        short_rec(w, k - 1, rem, tail_zero && v == 0, out);
        w.unset(k);
    }
}

/// First vector found with Q(x) = m exactly, walking the ellipsoid surface:
/// the innermost coordinate is solved, not scanned.
pub(crate) fn find_representation(form: &QuadForm, m: u64) -> Option<Vec<i64>> {
    let n = form.dim();
    if m == 0 {
        return Some(vec![0; n]);
    }
    if n == 0 {
        return None;
    }
    let mut w = Walker::new(form, m);
    find_rec(&mut w, n - 1, m as f64, true)
}

fn find_rec(w: &mut Walker, k: usize, budget: f64, tail_zero: bool) -> Option<Vec<i64>> {
    if k == 0 {
        // solve a00 x² + 2 s0 x + (qpart − m) = 0 over Z
        let a00 = w.form.entry(0, 0) as i128;
        let c = w.qpart - w.bound;
        let disc = w.s[0] * w.s[0] - a00 * c;
        if disc < 0 {
            return None;
        }
        let f = isqrt_u128(disc as u128) as i128;
        if f * f != disc {
            return None;
        }
        for root in [(-w.s[0] + f), (-w.s[0] - f)] {
            if root % a00 == 0 {
                let x0 = root / a00;
                if tail_zero && x0 <= 0 {
                    // zero vector only represents 0; mirror covers x0 < 0
                    if x0 < 0 && -x0 > 0 {
                        let mut vec = w.x.clone();
                        vec[0] = (-x0) as i64;
                        return Some(vec);
                    }
                    continue;
                }
                let mut vec = w.x.clone();
                vec[0] = x0 as i64;
                return Some(vec);
            }
        }
        return None;
    }
    let (lo, hi, c) = w.interval(k, budget);
    let lo = if tail_zero { lo.max(0) } else { lo };
    for v in lo..=hi {
        let t = v as f64 + c;
        let rem = budget - w.ldl.d[k] * t * t;
        if rem < -2.0 * w.ldl.d[k].max(1.0) - 2.0 {
            continue;
        }
        w.set(k, v);
        let hit = find_rec(w, k - 1, rem, tail_zero && v == 0);
        w.unset(k);
        if hit.is_some() {
            return hit;
        }
    }
    None
}

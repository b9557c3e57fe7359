//! Greedy Minkowski-style reduction and a canonical class representative.
//!
//! The greedy pass (size-reduction sweeps, diagonal sorting, sign
//! normalization) is cheap and good enough for display, but it is *not* a
//! class invariant. `canonical` computes a true invariant: the Gram matrix
//! realizing the lexicographically minimal key
//! `(d_1, d_2, a_21, d_3, a_31, a_32, …)` over all bases of the lattice,
//! found by a breadth-first frontier search over short vectors. Two forms
//! are equivalent iff their canonical Grams are equal — but `dedup` in the
//! escalator does not rely on that; it pairwise-verifies with the complete
//! backtracking isometry test and uses `canonical` only for deterministic
//! ordering and export.

use crate::error::Result;
use crate::form::{det_bareiss, gcd_i128, QuadForm};
use std::collections::BTreeMap;

/// Inner product u^t A v, exact.
fn inner(form: &QuadForm, u: &[i64], v: &[i64]) -> i128 {
    let n = form.dim();
    let mut acc = 0i128;
    for i in 0..n {
        let mut row = 0i128;
        for j in 0..n {
            row += form.entry(i, j) as i128 * v[j] as i128;
        }
        acc += u[i] as i128 * row;
    }
    acc
}

/// Size-reduction sweeps + diagonal sort + deterministic sign flips.
/// Equivalent to the input; deterministic; not canonical.
pub fn greedy_reduce(form: &QuadForm) -> QuadForm {
    let n = form.dim();
    if n == 0 {
        return form.clone();
    }
    let mut g: Vec<Vec<i64>> = form.gram_rows();
    let mut changed = true;
    let mut rounds = 0;
    while changed && rounds < 64 {
        changed = false;
        rounds += 1;
        // pair size-reduction: x_j -= mu * x_i
        for i in 0..n {
            for j in 0..n {
                if i == j || g[i][i] == 0 {
                    continue;
                }
                let num = 2 * g[i][j] + g[i][i]; // round(a_ij / a_ii) via floor((2a+b)/(2b))
                let mu = (num.div_euclid(2 * g[i][i])) as i64;
                if mu != 0 {
                    let new_jj = g[j][j] - 2 * mu * g[i][j] + mu * mu * g[i][i];
                    if new_jj < g[j][j] {
                        for k in 0..n {
                            let v = g[i][k];
                            g[j][k] -= mu * v;
                        }
                        for k in 0..n {
                            let v = g[k][i];
                            g[k][j] -= mu * v;
                        }
                        changed = true;
                    }
                }
            }
        }
        // sort diagonal ascending (stable bubble keeps determinism)
        for i in 0..n {
            for j in 0..n.saturating_sub(1) {
                if g[j][j] > g[j + 1][j + 1] {
                    g.swap(j, j + 1);
                    for row in g.iter_mut() {
                        row.swap(j, j + 1);
                    }
                    changed = true;
                }
            }
            let _ = i;
        }
    }
    // sign normalization: first nonzero entry above the diagonal in each
    // column made positive, scanning columns left to right
    for j in 1..n {
        let lead = (0..j).find(|&i| g[i][j] != 0);
        if let Some(i) = lead {
            if g[i][j] < 0 {
                for k in 0..n {
                    g[k][j] = -g[k][j];
                }
                for k in 0..n {
                    g[j][k] = -g[j][k];
                }
            }
        }
    }
    QuadForm::from_gram(&g).expect("reduction preserves validity")
}

/// GCD of all k×k minors of a k×n integer matrix; 0 iff rank < k.
/// Rows extend to a basis of Z^n iff this equals 1.
fn minors_gcd(rows: &[Vec<i64>], n: usize) -> i128 {
    let k = rows.len();
    if k == 0 {
        return 1;
    }
    let mut cols = (0..k).collect::<Vec<_>>();
    let mut g: i128 = 0;
    loop {
        let mut m = Vec::with_capacity(k * k);
        for row in rows {
            for &c in &cols {
                m.push(row[c] as i128);
            }
        }
        g = gcd_i128(g, det_bareiss(&m, k));
        if g == 1 {
            return 1;
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return g;
            }
            i -= 1;
            if cols[i] != i + n - k {
                cols[i] += 1;
                for j in i + 1..k {
                    cols[j] = cols[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Canonical Gram matrix of the equivalence class (deterministic, basis
/// independent). See the module docs for the key order.
pub fn canonical(form: &QuadForm) -> Result<QuadForm> {
    let n = form.dim();
    if n == 0 {
        return Ok(form.clone());
    }
    let reduced = greedy_reduce(form);
    let mut cap = reduced.max_diagonal().max(2) as u64;
    // double the search radius until two consecutive answers agree
    let mut best = canonical_with_cap(form, cap)?;
    loop {
        cap *= 2;
        let next = canonical_with_cap(form, cap)?;
        if next == best {
            return Ok(best);
        }
        best = next;
    }
}

fn canonical_with_cap(form: &QuadForm, cap: u64) -> Result<QuadForm> {
    let n = form.dim();
    let mut by_norm: BTreeMap<u64, Vec<Vec<i64>>> = BTreeMap::new();
    for (v, q) in form.short_vectors(cap)? {
        let neg: Vec<i64> = v.iter().map(|c| -c).collect();
        by_norm.entry(q).or_default().push(v);
        by_norm.entry(q).or_default().push(neg);
    }
    // frontier: all partial bases realizing the lex-min key prefix
    let mut frontier: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
    for _level in 0..n {
        let mut best_d: Option<u64> = None;
        let mut best_tuple: Vec<i64> = Vec::new();
        let mut next: Vec<Vec<Vec<i64>>> = Vec::new();
        for (&d, vecs) in &by_norm {
            if let Some(bd) = best_d {
                if d > bd {
                    break;
                }
            }
            for partial in &frontier {
                for v in vecs {
                    let mut rows: Vec<Vec<i64>> = partial.clone();
                    rows.push(v.clone());
                    if minors_gcd(&rows, n) != 1 {
                        continue;
                    }
                    let tuple: Vec<i64> = partial
                        .iter()
                        .map(|r| inner(form, v, r) as i64)
                        .collect();
                    let key = (d, tuple);
                    match best_d {
                        None => {
                            best_d = Some(d);
                            best_tuple = key.1;
                            next = vec![rows];
                        }
                        Some(bd) => {
                            if (d, &key.1) < (bd, &best_tuple) {
                                best_d = Some(d);
                                best_tuple = key.1;
                                next = vec![rows];
                            } else if d == bd && key.1 == best_tuple {
                                next.push(rows);
                            }
                        }
                    }
                }
            }
        }
        if best_d.is_none() {
            // cap too small to extend: caller will retry with a larger cap
            return canonical_with_cap(form, cap * 2);
        }
        frontier = next;
    }
    let rows = &frontier[0];
    form.transform(rows)
}

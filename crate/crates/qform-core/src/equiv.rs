//! Complete equivalence test for positive definite integral forms.
//!
//! `is_equivalent` runs cheap filters first (dimension, determinant, greedy
//! reduction, theta prefix) and falls back to a complete backtracking search
//! for a unimodular U with U B U^t = A. Rows of U are images of A's basis
//! vectors, matched against short vectors of B under exact inner-product
//! constraints. Rows are assigned scarcest-norm-first, which keeps the
//! branching factor down on the forms the escalator produces.

use crate::error::Result;
use crate::form::QuadForm;
use crate::reduce::greedy_reduce;
use std::collections::HashMap;

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

/// Decide whether two forms are integrally equivalent.
pub fn is_equivalent(a: &QuadForm, b: &QuadForm) -> Result<bool> {
    if a.dim() != b.dim() {
        return Ok(false);
    }
    if a.dim() == 0 {
        return Ok(true);
    }
    if a.determinant() != b.determinant() {
        return Ok(false);
    }
    let ra = greedy_reduce(a);
    let rb = greedy_reduce(b);
    if ra.gram() == rb.gram() {
        return Ok(true);
    }
    // theta prefix filter: representation numbers are class invariants
    let prefix = 2 * ra.max_diagonal().max(rb.max_diagonal()).max(1) as u64;
    if ra.theta_coefficients(prefix)? != rb.theta_coefficients(prefix)? {
        return Ok(false);
    }
    Ok(isometry(&ra, &rb)?.is_some())
}

/// Find U (rows) with U B U^t = A, or None. Complete for positive definite
/// inputs: every row candidate has norm bounded by A's diagonal.
pub fn isometry(a: &QuadForm, b: &QuadForm) -> Result<Option<Vec<Vec<i64>>>> {
    let n = a.dim();
    if n != b.dim() || a.determinant() != b.determinant() {
        return Ok(None);
    }
    let max_diag = (0..n).map(|i| a.entry(i, i)).max().unwrap_or(0);
    if max_diag < 0 {
        return Ok(None);
    }
    let mut by_norm: HashMap<u64, Vec<Vec<i64>>> = HashMap::new();
    for (v, q) in b.short_vectors(max_diag as u64)? {
        let neg: Vec<i64> = v.iter().map(|c| -c).collect();
        by_norm.entry(q).or_default().push(v);
        by_norm.entry(q).or_default().push(neg);
    }
    // scarcest norms first: permute A so rows with the fewest candidates
    // are matched early
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| {
        let q = a.entry(i, i) as u64;
        (by_norm.get(&q).map_or(0, |v| v.len()), usize::MAX - i)
    });
    let perm_gram: Vec<Vec<i64>> = order
        .iter()
        .map(|&i| order.iter().map(|&j| a.entry(i, j)).collect())
        .collect();
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(n);
    if !assign(&perm_gram, b, &by_norm, &mut rows, n) {
        return Ok(None);
    }
    // undo the permutation: rows[k] is the image of basis vector order[k]
    let mut u = vec![vec![0i64; n]; n];
    for (k, &i) in order.iter().enumerate() {
        u[i] = rows[k].clone();
    }
    Ok(Some(u))
}

fn assign(
    target: &[Vec<i64>],
    b: &QuadForm,
    by_norm: &HashMap<u64, Vec<Vec<i64>>>,
    rows: &mut Vec<Vec<i64>>,
    n: usize,
) -> bool {
    let k = rows.len();
    if k == n {
        // equal determinants force det U = ±1 here, so this is equivalence,
        // not just an isometric embedding
        return true;
    }
    let want = target[k][k] as u64;
    let Some(cands) = by_norm.get(&want) else {
        return false;
    };
    'cand: for v in cands {
        for (j, r) in rows.iter().enumerate() {
            if inner(b, v, r) != target[k][j] as i128 {
                continue 'cand;
            }
        }
        rows.push(v.clone());
        if assign(target, b, by_norm, rows, n) {
            return true;
        }
        rows.pop();
    }
    false
}

//! Raw escalations: all one-variable extensions of a form whose new
//! diagonal entry is the truant.
//!
//! With A positive definite and corner t > 0, the bordered matrix
//! [[A, b], [b^t, t]] is positive definite iff b^t A^{-1} b < t, i.e. iff
//! b^t adj(A) b < t·det(A) in exact integers. The border vectors therefore
//! fill an ellipsoid we can enumerate with the short-vector walker applied
//! to the adjugate form.

use crate::error::{EscalateError, Result};
use qform_core::{QFormError, QuadForm};

/// All (dim+1)-dimensional escalations of `q` with corner `t`, in a
/// deterministic order. Counts include both signs of each border vector.
pub fn escalations(q: &QuadForm, t: u64) -> Result<Vec<QuadForm>> {
    let n = q.dim();
    if n >= 6 {
        return Err(EscalateError::DimensionCap(n));
    }
    let t = i64::try_from(t).map_err(|_| QFormError::Overflow("escalation corner"))?;
    if n == 0 {
        return Ok(vec![QuadForm::diagonal(&[t])?]);
    }
    let det = q.determinant();
    let adj = q.adjugate();
    let mut adj_rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            adj_rows[i][j] = i64::try_from(adj[i * n + j])
                .map_err(|_| QFormError::Overflow("adjugate entry"))?;
        }
    }
    let adj_form = QuadForm::from_gram(&adj_rows)?;
    let strict = u64::try_from(t as i128 * det - 1).map_err(|_| QFormError::Overflow("bound"))?;

    let mut out = Vec::new();
    out.push(q.try_extend(&vec![0; n], t)?);
    for (b, _) in adj_form.short_vectors(strict)? {
        let neg: Vec<i64> = b.iter().map(|c| -c).collect();
        out.push(q.try_extend(&b, t)?);
        out.push(q.try_extend(&neg, t)?);
    }
    Ok(out)
}

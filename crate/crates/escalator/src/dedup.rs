//! Class deduplication. Forms are bucketed by cheap invariants
//! (determinant, theta prefix) and only bucket-mates are compared with the
//! complete backtracking equivalence test — canonical Grams are used for
//! ordering the output, never as a substitute for the exact test.

use crate::error::{EscalateError, Result};
use qform_core::{canonical, is_equivalent, QuadForm};
use std::collections::HashMap;

const THETA_PREFIX: u64 = 24;

/// One representative per equivalence class: the first-encountered member,
/// with the output sorted by canonical Gram (lex order on the flattened
/// matrix). Deterministic for a given input order.
pub fn dedup(forms: &[QuadForm]) -> Result<Vec<QuadForm>> {
    let mut reps: Vec<QuadForm> = Vec::new();
    let mut buckets: HashMap<(i128, Vec<u64>), Vec<usize>> = HashMap::new();
    'form: for q in forms {
        if let Some(first) = reps.first() {
            if first.dim() != q.dim() {
                return Err(EscalateError::MixedDimensions(first.dim(), q.dim()));
            }
        }
        let key = (q.determinant(), q.theta_coefficients(THETA_PREFIX)?);
        let bucket = buckets.entry(key).or_default();
        for &i in bucket.iter() {
            if is_equivalent(q, &reps[i])? {
                continue 'form;
            }
        }
        bucket.push(reps.len());
        reps.push(q.clone());
    }
    let mut keyed: Vec<(Vec<i64>, QuadForm)> = reps
        .into_iter()
        .map(|q| Ok((canonical(&q)?.gram().to_vec(), q)))
        .collect::<Result<_>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, q)| q).collect())
}

//! Prescribed exception sets and the truant of a form.
//!
//! An exception set S is a finite sorted set of positive integers the form
//! is *allowed* to skip. The truant of Q relative to S is the least
//! positive integer outside S that Q fails to represent — the number that
//! drives the next escalation step.

use crate::error::{QFormError, Result};
use crate::form::QuadForm;
use std::fmt;

/// Finite sorted set of positive integers permitted to be missed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExceptionSet {
    elems: Vec<u64>,
}

impl ExceptionSet {
    pub fn empty() -> Self {
        ExceptionSet { elems: Vec::new() }
    }

    pub fn single(m: u64) -> Self {
        ExceptionSet { elems: vec![m] }
    }

    pub fn pair(m: u64, n: u64) -> Self {
        let mut elems = vec![m, n];
        elems.sort_unstable();
        elems.dedup();
        ExceptionSet { elems }
    }

    /// Validates: all positive, distinct; stores sorted ascending.
    pub fn new(mut elems: Vec<u64>) -> Result<Self> {
        elems.sort_unstable();
        if elems.first() == Some(&0) {
            return Err(QFormError::Invalid(
                "exception sets contain positive integers only".into(),
            ));
        }
        let before = elems.len();
        elems.dedup();
        if elems.len() != before {
            return Err(QFormError::Invalid(
                "exception set elements must be distinct".into(),
            ));
        }
        Ok(ExceptionSet { elems })
    }

    pub fn contains(&self, m: u64) -> bool {
        self.elems.binary_search(&m).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elems.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.elems
    }
}

impl fmt::Display for ExceptionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", m)?;
        }
        write!(f, "}}")
    }
}

/// Default truant search cap.
pub const TRUANT_CAP: u64 = 10_000;

impl QuadForm {
    /// Least positive integer outside `s` not represented by the form, or
    /// None if every such integer up to `cap` is represented. Theta blocks
    /// are grown geometrically so small truants stay cheap.
    pub fn truant(&self, s: &ExceptionSet, cap: u64) -> Result<Option<u64>> {
        let mut lo = 1u64;
        let mut block = 64u64.min(cap.max(1));
        while lo <= cap {
            let hi = (lo + block - 1).min(cap);
            let counts = self.theta_coefficients(hi)?;
            for m in lo..=hi {
                if counts[m as usize] == 0 && !s.contains(m) {
                    return Ok(Some(m));
                }
            }
            lo = hi + 1;
            block = block.saturating_mul(4);
        }
        Ok(None)
    }
}

//! JSON serialization for forms and a small CSV helper for theta series.

use crate::error::{QFormError, Result};
use crate::form::QuadForm;
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::Path;

/// Wire format: symmetric Gram matrix, optionally accompanied by the
/// canonical representative so downstream consumers can diff classes
/// without recomputing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormJson {
    pub dim: usize,
    pub gram: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<Vec<Vec<i64>>>,
}

impl From<&QuadForm> for FormJson {
    fn from(form: &QuadForm) -> Self {
        FormJson {
            dim: form.dim(),
            gram: form.gram_rows(),
            canonical: None,
        }
    }
}

impl FormJson {
    pub fn with_canonical(form: &QuadForm, canonical: &QuadForm) -> Self {
        FormJson {
            dim: form.dim(),
            gram: form.gram_rows(),
            canonical: Some(canonical.gram_rows()),
        }
    }

    pub fn to_form(&self) -> Result<QuadForm> {
        let form = QuadForm::from_gram(&self.gram)?;
        if form.dim() != self.dim {
            return Err(QFormError::DimensionMismatch {
                dim: self.dim,
                len: form.dim(),
            });
        }
        Ok(form)
    }
}

pub fn form_to_json(form: &QuadForm) -> Result<String> {
    Ok(serde_json::to_string(&FormJson::from(form))?)
}

pub fn form_from_json(text: &str) -> Result<QuadForm> {
    let parsed: FormJson = serde_json::from_str(text)?;
    parsed.to_form()
}

pub fn form_from_path(path: &Path) -> Result<QuadForm> {
    form_from_json(&std::fs::read_to_string(path)?)
}

/// `m,r(m)` rows, one per coefficient, preceded by a header.
pub fn write_theta_csv<W: Write>(mut out: W, counts: &[u64]) -> std::io::Result<()> {
    writeln!(out, "m,count")?;
    for (m, c) in counts.iter().enumerate() {
        writeln!(out, "{},{}", m, c)?;
    }
    Ok(())
}

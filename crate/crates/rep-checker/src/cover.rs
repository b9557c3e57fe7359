//! Split local covers: a sublattice d·x² ⊥ T of a quaternary form whose
//! local representation behaviour agrees with the parent's.
//!
//! Given a primitive vector v with Q(v) = d, the vectors orthogonal to v
//! (with respect to the bilinear form) make up a rank-3 sublattice, and
//! restricting Q there gives a ternary form T. The sublattice Zv ⊕ ker is
//! then d·x² ⊥ T sitting inside Q, so everything that sublattice represents,
//! Q represents. The cover is *useful* once its local conditions match the
//! parent's, which we certify by comparing local representability over a
//! full period of residues.

use local_densities::LocalAnalysis;
use num_integer::Integer;
use qform_core::{QFormError, QuadForm};

use crate::error::{CheckError, Result};

/// Knobs for the cover search.
#[derive(Debug, Clone)]
pub struct CoverConfig {
    /// Largest split value d to try; the search walks d = 1, 2, … upward.
    pub d_cap: u64,
    /// Ceiling on the residue range used for the local-agreement
    /// certificate. The natural period 8·det·level can be large; capping it
    /// keeps the search fast at the cost of a weaker certificate (recorded
    /// in `verified_modulus`).
    pub residue_cap: u64,
}

impl Default for CoverConfig {
    fn default() -> Self {
        Self {
            d_cap: 50,
            residue_cap: 1 << 21,
        }
    }
}

/// A verified decomposition d·x² ⊥ T ⊆ Q.
#[derive(Debug, Clone)]
pub struct SplitLocalCover {
    /// The split coefficient: Q(v) = d for the first embedding vector.
    pub d: u64,
    /// Gram matrix of Q restricted to the orthogonal complement of v.
    pub ternary: QuadForm,
    /// The covered quaternary form.
    pub parent: QuadForm,
    /// Residues 1..=verified_modulus over which local representability of
    /// parent and cover were compared and found identical.
    pub verified_modulus: u64,
    /// Rows [v, k₁, k₂, k₃]: v splits off d, the kᵢ are a basis of its
    /// orthogonal complement in Z⁴. `parent.transform(&embedding)` is the
    /// block Gram diag(d) ⊕ T.
    pub embedding: Vec<Vec<i64>>,
}

impl SplitLocalCover {
    /// The Gram matrix diag(d) ⊕ T of the sublattice, as the parent sees it.
    pub fn cover_form(&self) -> Result<QuadForm> {
        Ok(self.parent.transform(&self.embedding)?)
    }
}

/// Search for a split local cover with the default knobs.
pub fn find_split_local_cover(parent: &QuadForm) -> Result<SplitLocalCover> {
    find_split_local_cover_with(parent, &CoverConfig::default())
}

/// Search for a split local cover of a quaternary form.
///
/// Walks d upward; for each d, tries every primitive vector of value d (in a
/// deterministic order) and accepts the first whose cover passes the local
/// agreement check, so the returned d is minimal among verified covers.
pub fn find_split_local_cover_with(
    parent: &QuadForm,
    config: &CoverConfig,
) -> Result<SplitLocalCover> {
    if parent.dim() != 4 {
        return Err(CheckError::NotQuaternary { dim: parent.dim() });
    }
    let gram = parent.gram_rows();
    let modulus = agreement_modulus(parent, config)?;
    let mut parent_local = LocalAnalysis::new(parent)?;
    for d in 1..=config.d_cap {
        let mut candidates: Vec<Vec<i64>> = parent
            .short_vectors(d)?
            .into_iter()
            .filter(|&(_, value)| value == d)
            .map(|(v, _)| v)
            .filter(|v| vector_gcd(v) == 1)
            .collect();
        candidates.sort();
        for v in candidates {
            let w = gram_times(&gram, &v)?;
            let kernel = integer_kernel(&w)?;
            let ternary = parent.transform(&kernel)?;
            let mut embedding = Vec::with_capacity(4);
            embedding.push(v);
            embedding.extend(kernel);
            let cover_form = parent.transform(&embedding)?;
            if locally_agree(&mut parent_local, &cover_form, modulus)? {
                return Ok(SplitLocalCover {
                    d,
                    ternary,
                    parent: parent.clone(),
                    verified_modulus: modulus,
                    embedding,
                });
            }
        }
    }
    Err(CheckError::NoCover { d_cap: config.d_cap })
}

/// min(8 · det · level, residue_cap): one full period of the local
/// conditions, or the configured ceiling if the period is out of reach.
fn agreement_modulus(parent: &QuadForm, config: &CoverConfig) -> Result<u64> {
    let det = parent.determinant();
    debug_assert!(det > 0);
    let period = 8u128 * det as u128 * parent.level()? as u128;
    Ok(period.min(config.residue_cap as u128) as u64)
}

fn locally_agree(
    parent: &mut LocalAnalysis,
    cover: &QuadForm,
    modulus: u64,
) -> Result<bool> {
    let mut cover_local = LocalAnalysis::new(cover)?;
    for m in 1..=modulus {
        if parent.is_locally_represented(m)? != cover_local.is_locally_represented(m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn vector_gcd(v: &[i64]) -> u64 {
    v.iter().fold(0u64, |g, &x| g.gcd(&x.unsigned_abs()))
}

/// w = A·v, the bilinear functional cut out by v.
fn gram_times(gram: &[Vec<i64>], v: &[i64]) -> Result<Vec<i64>> {
    gram.iter()
        .map(|row| {
            let s: i128 = row.iter().zip(v).map(|(&a, &x)| a as i128 * x as i128).sum();
            i64::try_from(s).map_err(|_| CheckError::Core(QFormError::Overflow("A·v entry")))
        })
        .collect()
}

/// Basis of {y ∈ Zⁿ : w·y = 0} for nonzero w, via unimodular row operations.
///
/// Start from the identity rows of Zⁿ and their dot products d = w. Each
/// Bézout combination of two rows zeroes one dot product while keeping the
/// row set a basis (the 2×2 mixing block has determinant one). When a single
/// nonzero dot product remains, the other n−1 rows span the kernel — all of
/// it, because the kernel of an integer linear functional is saturated.
fn integer_kernel(w: &[i64]) -> Result<Vec<Vec<i64>>> {
    let n = w.len();
    let mut rows: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            let mut r = vec![0i128; n];
            r[i] = 1;
            r
        })
        .collect();
    let mut dots: Vec<i128> = w.iter().map(|&x| x as i128).collect();
    let mut pivot: Option<usize> = None;
    for i in 0..n {
        if dots[i] == 0 {
            continue;
        }
        let Some(p) = pivot else {
            pivot = Some(i);
            continue;
        };
        let (g, x, y) = egcd(dots[p], dots[i]);
        let (cp, ci) = (dots[p] / g, dots[i] / g);
        let combined: Vec<i128> = (0..n).map(|k| x * rows[p][k] + y * rows[i][k]).collect();
        let cleared: Vec<i128> = (0..n).map(|k| cp * rows[i][k] - ci * rows[p][k]).collect();
        rows[p] = combined;
        rows[i] = cleared;
        dots[p] = g;
        dots[i] = 0;
    }
    let p = pivot.expect("kernel of the zero functional is not a hyperplane");
    rows.into_iter()
        .enumerate()
        .filter(|&(i, _)| i != p)
        .map(|(_, r)| {
            r.into_iter()
                .map(|x| {
                    i64::try_from(x)
                        .map_err(|_| CheckError::Core(QFormError::Overflow("kernel basis entry")))
                })
                .collect()
        })
        .collect()
}

/// (g, x, y) with a·x + b·y = g = gcd(a, b) > 0 (for (a, b) ≠ (0, 0)).
fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

//! Sorting escalated quaternaries into the three behavioural types.
//!
//! Type C forms have a local obstruction: an entire residue class that no
//! p-adic solution ever reaches, so the exception set is a union of
//! arithmetic progressions and the form is hopeless as it stands.  Type B
//! forms are locally fine but anisotropic at some prime p, and their
//! exceptions pile up along geometric families F_k = {k·p^j}; they need
//! further escalation before the exception set becomes finite.  Type A
//! forms except only a finite set, which a theta scan pins down directly.
//!
//! The obstruction test is complete, not a heuristic.  Whether m is locally
//! represented at p depends only on e = ord_p(m) and on the unit m/p^e
//! modulo p^k with k = 2·ord_p(2·det) + 1: past that precision Hensel
//! lifting is unobstructed, and multiplying m by p² past e = k cycles the
//! verdict with period two.  Sweeping e ≤ k+1 against every unit class
//! modulo p^k therefore covers every positive integer at p, and the primes
//! not dividing 2·det are never obstructed at all.

use crate::error::{PipelineError, Result};
use eisenstein_bounds::factorize;
use local_densities::{anisotropic_primes, PrimeCtx};
use num_traits::Zero;
use qform_core::QuadForm;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// The three behavioural types of a quaternary escalation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormKind {
    /// Finitely many exceptions.
    TypeA,
    /// No local obstruction, but an anisotropic prime feeds an infinite
    /// geometric exception family.
    TypeB,
    /// A residue class is locally unrepresented.
    TypeC,
}

impl FormKind {
    pub fn name(self) -> &'static str {
        match self {
            FormKind::TypeA => "TypeA",
            FormKind::TypeB => "TypeB",
            FormKind::TypeC => "TypeC",
        }
    }
}

/// Witness that a whole residue class is locally unrepresented: no m with
/// `m ≡ residue (mod modulus)` is represented over Z_prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalObstruction {
    pub prime: u64,
    pub modulus: u64,
    pub residue: u64,
}

/// Evidence for a Type B verdict: the anisotropic prime, the normalized
/// seeds k whose families F_k = {k·p^j} the scanned exceptions follow, and
/// the scanned exceptions themselves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEvidence {
    pub prime: u64,
    pub seeds: Vec<u64>,
    pub exceptions: Vec<u64>,
}

/// Kind-specific evidence; the variant always matches the kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Evidence {
    FiniteExceptions(Vec<u64>),
    Family(FamilyEvidence),
    Obstruction(LocalObstruction),
}

/// A classified form with the evidence that earned the verdict.
#[derive(Debug, Clone)]
pub struct FormClassification {
    pub form: QuadForm,
    pub kind: FormKind,
    pub evidence: Evidence,
}

impl FormClassification {
    /// Finite exception list for a Type A verdict.
    pub fn finite_exceptions(&self) -> Option<&[u64]> {
        match &self.evidence {
            Evidence::FiniteExceptions(list) => Some(list),
            _ => None,
        }
    }

    pub fn family(&self) -> Option<&FamilyEvidence> {
        match &self.evidence {
            Evidence::Family(fam) => Some(fam),
            _ => None,
        }
    }

    pub fn obstruction(&self) -> Option<&LocalObstruction> {
        match &self.evidence {
            Evidence::Obstruction(ob) => Some(ob),
            _ => None,
        }
    }
}

/// Caps for the classification scans.
#[derive(Debug, Clone, Copy)]
pub struct ClassifyConfig {
    /// Exceptions are read off the theta series up to this bound.
    pub scan_bound: u64,
    /// Hard cap on the number of local-obstruction probes per prime; a form
    /// whose determinant demands more is reported, not silently skipped.
    pub probe_cap: u64,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig {
            scan_bound: 10_000,
            probe_cap: 1 << 22,
        }
    }
}

/// Classify with the default scan bound of 10⁴.
pub fn classify(form: &QuadForm) -> Result<FormClassification> {
    classify_with(form, &ClassifyConfig::default())
}

pub fn classify_with(form: &QuadForm, config: &ClassifyConfig) -> Result<FormClassification> {
    if form.dim() != 4 {
        return Err(PipelineError::NotQuaternary(form.dim()));
    }
    if let Some(obstruction) = local_obstruction_with(form, config.probe_cap)? {
        return Ok(FormClassification {
            form: form.clone(),
            kind: FormKind::TypeC,
            evidence: Evidence::Obstruction(obstruction),
        });
    }
    let exceptions = exceptions_to(form, config.scan_bound)?;
    for p in anisotropic_primes(form)? {
        let seeds = family_seeds(&exceptions, p, config.scan_bound);
        if !seeds.is_empty() {
            return Ok(FormClassification {
                form: form.clone(),
                kind: FormKind::TypeB,
                evidence: Evidence::Family(FamilyEvidence {
                    prime: p,
                    seeds,
                    exceptions,
                }),
            });
        }
    }
    Ok(FormClassification {
        form: form.clone(),
        kind: FormKind::TypeA,
        evidence: Evidence::FiniteExceptions(exceptions),
    })
}

/// Search every prime of 2·det for a locally unrepresented residue class.
pub fn local_obstruction(form: &QuadForm) -> Result<Option<LocalObstruction>> {
    local_obstruction_with(form, ClassifyConfig::default().probe_cap)
}

fn local_obstruction_with(form: &QuadForm, probe_cap: u64) -> Result<Option<LocalObstruction>> {
    if form.dim() != 4 {
        return Err(PipelineError::NotQuaternary(form.dim()));
    }
    let two_det =
        u64::try_from(2 * form.determinant()).map_err(|_| PipelineError::ResourceExhausted {
            what: "determinant in the local obstruction sweep".into(),
            cap: u64::MAX,
        })?;
    for (p, mult) in factorize(two_det) {
        let mut ctx = PrimeCtx::new(form, p)?;
        let k = 2 * mult + 1;
        let pk = checked_pow(p, k).ok_or_else(|| probe_overflow(p, probe_cap))?;
        let probes = pk as u128 * (k as u128 + 2);
        if probes > probe_cap as u128 {
            return Err(probe_overflow(p, probe_cap));
        }
        for e in 0..=k + 1 {
            let pe = checked_pow(p, e).ok_or_else(|| probe_overflow(p, probe_cap))?;
            for unit in (1..pk).filter(|u| u % p != 0) {
                let m = match unit.checked_mul(pe) {
                    Some(m) => m,
                    None => return Err(probe_overflow(p, probe_cap)),
                };
                if ctx.beta(m).is_zero() {
                    let modulus = pk
                        .checked_mul(pe)
                        .ok_or_else(|| probe_overflow(p, probe_cap))?;
                    return Ok(Some(LocalObstruction {
                        prime: p,
                        modulus,
                        residue: m,
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn probe_overflow(p: u64, cap: u64) -> PipelineError {
    PipelineError::ResourceExhausted {
        what: format!("local obstruction sweep at p = {p}"),
        cap,
    }
}

/// Positive integers up to `bound` with no representation, via one theta
/// pass.  Works in any dimension.
pub fn exceptions_to(form: &QuadForm, bound: u64) -> Result<Vec<u64>> {
    let counts = form.theta_coefficients(bound)?;
    Ok((1..=bound).filter(|&m| counts[m as usize] == 0).collect())
}

/// Normalized seeds k whose geometric family the exception set follows.
///
/// A seed is an exception m that is not itself a p or p² multiple of
/// another exception, such that every member of m, m·r, m·r², … within the
/// scan bound is also an exception, for ratio r = p or r = p².  At least
/// two members must be visible; a two-member chain whose next member
/// overflows the bound still counts, since the scan cannot refute it.
pub fn family_seeds(exceptions: &[u64], p: u64, bound: u64) -> Vec<u64> {
    let set: BTreeSet<u64> = exceptions.iter().copied().collect();
    let chain_holds = |start: u64, ratio: u64| -> bool {
        let mut members = 0u32;
        let mut v = start as u128;
        while v <= bound as u128 {
            if !set.contains(&(v as u64)) {
                return false;
            }
            members += 1;
            v *= ratio as u128;
        }
        members >= 2
    };
    let mut seeds = Vec::new();
    for &m in &set {
        if m % p == 0 && set.contains(&(m / p)) {
            continue;
        }
        if m % (p * p) == 0 && set.contains(&(m / (p * p))) {
            continue;
        }
        if chain_holds(m, p * p) || chain_holds(m, p) {
            seeds.push(m);
        }
    }
    seeds
}

/// Is m a member of the family F_k = {k·p^j}?
pub fn family_contains(seed: u64, p: u64, m: u64) -> bool {
    if m == 0 || m % seed != 0 {
        return false;
    }
    let mut q = m / seed;
    while q % p == 0 {
        q /= p;
    }
    q == 1
}

fn checked_pow(p: u64, e: u32) -> Option<u64> {
    p.checked_pow(e)
}

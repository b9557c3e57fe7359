//! Escalation past dimension four: pair hunts, family taming, and the
//! generalized subform switch.
//!
//! A pair hunt asks whether some form of bounded dimension represents every
//! positive integer except exactly {m, n}.  The walk is breadth-first: at
//! each level a form whose truant relative to {m, n} vanishes is a witness,
//! and everything else escalates by its truant into the next level, with
//! children that represent m or n pruned immediately (representation sets
//! only grow along escalations, so pruning is permanent).  Breadth-first
//! order makes the first witness one of minimal dimension.
//!
//! Type B forms get a different treatment.  Escalating by a family seed k
//! produces children that represent k, hence k·p^{2j} for every j by
//! scaling the witness vector; if a child also picks up k·p, the whole
//! family F_k = {k·p^j} is dead.  One extra escalation by k·p covers the
//! stubborn children, and anything that survives both rounds escapes the
//! family net — a hard error here, since the claim that exceptions stay
//! inside the net is a conjecture we verify, not assume.
//!
//! The subform switch rescues quinary escalations built over a locally
//! obstructed quaternary: some rank-4 sublattice spanned by four of the
//! five basis vectors, bent by bounded multiples of the fifth, usually has
//! no obstruction, and escalation can restart from it.

use crate::classify::{
    classify_with, family_seeds, local_obstruction, ClassifyConfig, Evidence, FormClassification,
};
use crate::error::{PipelineError, Result};
use escalator::{dedup, escalations};
use qform_core::{ExceptionSet, QuadForm};

/// Caps for the higher escalation walks.
#[derive(Debug, Clone, Copy)]
pub struct HigherConfig {
    /// Largest dimension a walk may reach.
    pub dim_cap: usize,
    /// Truant searches scan up to this bound.
    pub truant_cap: u64,
    /// Largest frontier a level may hold before the walk aborts.
    pub class_cap: usize,
    /// Theta bound for the finite-exception scan of settled branches.
    pub finite_scan_bound: u64,
}

impl Default for HigherConfig {
    fn default() -> Self {
        HigherConfig {
            dim_cap: 6,
            truant_cap: 300,
            class_cap: 100_000,
            finite_scan_bound: 2_000,
        }
    }
}

/// Verdict of a pair hunt.
#[derive(Debug, Clone)]
pub enum PairOutcome {
    /// A form of minimal dimension excepting exactly the target pair (up to
    /// the truant cap).
    Achieved { witness: QuadForm, dim: usize },
    /// Every branch died: no form over this root can except the pair.
    Impossible,
    /// The dimension cap was reached with branches still open.
    CapExhausted { open_branches: usize },
}

/// Hunt for a form excepting exactly {m, n}, breadth-first from `root`.
///
/// The root may be any form whose exceptions contain the pair — including
/// the zero-dimensional form, which excepts everything.
pub fn higher_escalate_type_a(
    root: &QuadForm,
    pair: (u64, u64),
    config: &HigherConfig,
) -> Result<PairOutcome> {
    Ok(match pair_walk(root, pair, config)? {
        WalkEnd::Achieved(mut witnesses, dim) => PairOutcome::Achieved {
            witness: witnesses.swap_remove(0),
            dim,
        },
        WalkEnd::Impossible => PairOutcome::Impossible,
        WalkEnd::CapExhausted(open) => PairOutcome::CapExhausted {
            open_branches: open,
        },
    })
}

/// Every witness class at the first achieving level, for callers that want
/// to vet candidates more deeply than the truant cap.  Empty when the hunt
/// dies or hits the dimension cap.
pub fn pair_candidates(
    root: &QuadForm,
    pair: (u64, u64),
    config: &HigherConfig,
) -> Result<Vec<QuadForm>> {
    Ok(match pair_walk(root, pair, config)? {
        WalkEnd::Achieved(witnesses, _) => witnesses,
        _ => Vec::new(),
    })
}

enum WalkEnd {
    Achieved(Vec<QuadForm>, usize),
    Impossible,
    CapExhausted(usize),
}

fn pair_walk(root: &QuadForm, pair: (u64, u64), config: &HigherConfig) -> Result<WalkEnd> {
    let (m, n) = pair;
    let target = ExceptionSet::pair(m, n);
    let mut frontier = vec![root.clone()];
    frontier.retain(|q| !q.is_represented(m) && !q.is_represented(n));
    loop {
        if frontier.is_empty() {
            return Ok(WalkEnd::Impossible);
        }
        let mut achieved = Vec::new();
        let mut truants = Vec::with_capacity(frontier.len());
        for q in &frontier {
            match q.truant(&target, config.truant_cap)? {
                None => achieved.push(q.clone()),
                Some(t) => truants.push((q.clone(), t)),
            }
        }
        if !achieved.is_empty() {
            let dim = achieved[0].dim();
            return Ok(WalkEnd::Achieved(achieved, dim));
        }
        let next_dim = frontier[0].dim() + 1;
        if next_dim > config.dim_cap {
            return Ok(WalkEnd::CapExhausted(frontier.len()));
        }
        let mut children = Vec::new();
        for (q, t) in &truants {
            children.extend(escalations(q, *t)?);
        }
        let mut next = dedup(&children)?;
        next.retain(|q| !q.is_represented(m) && !q.is_represented(n));
        if next.len() > config.class_cap {
            return Err(PipelineError::ResourceExhausted {
                what: format!("pair hunt frontier at dimension {next_dim}"),
                cap: config.class_cap as u64,
            });
        }
        frontier = next;
    }
}

/// What became of a Type B form.
#[derive(Debug, Clone)]
pub enum TypeBOutcome {
    /// No family seeds: the exception set was finite all along, hand it to
    /// the Type A machinery unchanged.
    FiniteHandoff { exceptions: Vec<u64> },
    /// Seed escalations killed every family; each surviving branch carries
    /// its residual finite exceptions up to the configured scan bound.
    EscalatedFinite {
        rounds: usize,
        branches: Vec<(QuadForm, Vec<u64>)>,
    },
}

/// Tame a Type B classification by escalating along its family seeds.
pub fn higher_escalate_type_b(
    class: &FormClassification,
    config: &HigherConfig,
) -> Result<TypeBOutcome> {
    let family = match &class.evidence {
        Evidence::FiniteExceptions(list) => {
            return Ok(TypeBOutcome::FiniteHandoff {
                exceptions: list.clone(),
            })
        }
        Evidence::Family(fam) => fam,
        Evidence::Obstruction(_) => {
            return Err(PipelineError::WrongKind {
                expected: "TypeA or TypeB",
                found: "TypeC",
            })
        }
    };
    if family.seeds.is_empty() {
        return Ok(TypeBOutcome::FiniteHandoff {
            exceptions: family.exceptions.clone(),
        });
    }
    let p = family.prime;
    // Killing k and k·p kills all of F_k: scaling a witness vector by p
    // covers every higher power.
    let mut to_clear: Vec<u64> = Vec::new();
    for &k in &family.seeds {
        to_clear.push(k);
        to_clear.push(k * p);
    }
    to_clear.sort_unstable();
    to_clear.dedup();

    let seed = family.seeds[0];
    let mut branches = dedup(&escalations(&class.form, seed)?)?;
    let mut rounds = 1;
    loop {
        let stuck: Vec<(usize, u64)> = branches
            .iter()
            .enumerate()
            .filter_map(|(i, b)| {
                to_clear
                    .iter()
                    .copied()
                    .find(|&v| !b.is_represented(v))
                    .map(|v| (i, v))
            })
            .collect();
        if stuck.is_empty() {
            break;
        }
        if branches[0].dim() >= config.dim_cap {
            let escaped: Vec<u64> = stuck.iter().map(|&(_, v)| v).collect();
            return Err(PipelineError::FamilyEscape {
                form: Box::new(class.form.clone()),
                escaped,
                rounds,
            });
        }
        let mut next = Vec::new();
        for (i, branch) in branches.iter().enumerate() {
            match stuck.iter().find(|&&(j, _)| j == i) {
                Some(&(_, missing)) => next.extend(escalations(branch, missing)?),
                None => next.push(branch.clone()),
            }
        }
        branches = dedup(&next)?;
        rounds += 1;
        if branches.len() > config.class_cap {
            return Err(PipelineError::ResourceExhausted {
                what: "type B escalation branches".into(),
                cap: config.class_cap as u64,
            });
        }
    }

    // Every branch now represents all of ⋃ F_k; what is left must look
    // finite at desk scale, or the conjecture failed and we stop.
    let mut settled = Vec::with_capacity(branches.len());
    for branch in branches {
        let leftovers = crate::classify::exceptions_to(&branch, config.finite_scan_bound)?;
        let persisting = family_seeds(&leftovers, p, config.finite_scan_bound);
        if !persisting.is_empty() {
            return Err(PipelineError::FamilyEscape {
                form: Box::new(branch),
                escaped: persisting,
                rounds,
            });
        }
        settled.push((branch, leftovers));
    }
    Ok(TypeBOutcome::EscalatedFinite {
        rounds,
        branches: settled,
    })
}

/// A successful subform switch: the sublattice basis (rows, in the parent's
/// coordinates), its Gram matrix, and the classification that cleared it.
#[derive(Debug, Clone)]
pub struct SubformSwitch {
    pub subform: QuadForm,
    pub basis: Vec<Vec<i64>>,
    pub classification: FormClassification,
}

/// Search a quinary form for a rank-4 sublattice with no local obstruction.
///
/// Candidates keep four of the five basis vectors, each bent by a bounded
/// multiple of the dropped one: rows e_i + c_i·e_d with |c_i| ≤ 2.  The
/// first candidate (in a fixed order, small bends first) that classifies as
/// anything other than Type C wins; `None` means every candidate in the box
/// kept an obstruction.
pub fn subform_switch(
    quinary: &QuadForm,
    config: &ClassifyConfig,
) -> Result<Option<SubformSwitch>> {
    if quinary.dim() != 5 {
        return Err(PipelineError::NotQuinary(quinary.dim()));
    }
    const BENDS: [i64; 5] = [0, 1, -1, 2, -2];
    let mut seen = std::collections::HashSet::new();
    for dropped in 0..5 {
        let kept: Vec<usize> = (0..5).filter(|&i| i != dropped).collect();
        for combo in 0..BENDS.len().pow(4) {
            let mut c = [0i64; 4];
            let mut ix = combo;
            for slot in &mut c {
                *slot = BENDS[ix % BENDS.len()];
                ix /= BENDS.len();
            }
            let basis: Vec<Vec<i64>> = kept
                .iter()
                .zip(&c)
                .map(|(&i, &bend)| {
                    let mut row = vec![0i64; 5];
                    row[i] = 1;
                    row[dropped] += bend;
                    row
                })
                .collect();
            let subform = quinary.transform(&basis)?;
            if !seen.insert(qform_core::canonical(&subform)?.gram().to_vec()) {
                continue;
            }
            if local_obstruction(&subform)?.is_some() {
                continue;
            }
            let classification = classify_with(&subform, config)?;
            return Ok(Some(SubformSwitch {
                subform,
                basis,
                classification,
            }));
        }
    }
    Ok(None)
}

//! The end-to-end verdict for the Halmos form x² + 2y² + 7z² + 13w².
//!
//! The closure loop hands over batches of eligible numbers reaching into
//! the tens of billions, so the representability checker is a cost ladder.
//! An approximate bitmap pass (prism-clipped ellipsoid) settles the bulk;
//! its survivors rerun against the exact bitmap at the same width; a much
//! wider exact pass then retries the stragglers with more slices per
//! number, which makes a represented number slipping through all stages
//! astronomically unlikely; whatever still survives faces the full
//! quaternary theta test, which is only affordable because at that point
//! the survivors are genuinely unrepresented — and small.  A guard errors
//! out rather than letting a huge survivor start an open-ended enumeration.

use crate::error::{PipelineError, Result};
use eisenstein_bounds::{halmos_form, BoundConstants};
use eligible_engine::{closure_loop, ClosureError, ClosureOutcome, EligibleSession, FormProfile};
use qform_core::QuadForm;
use rep_checker::{
    check_numbers, find_split_local_cover, resolve_with_full_theta, BitsetMode, SplitLocalCover,
};

/// Knobs for the checker ladder.
#[derive(Debug, Clone, Copy)]
pub struct HalmosConfig {
    /// Slices per number in the first two stages.
    pub attempts: u64,
    /// Slices per number in the wide insurance stage.
    pub wide_attempts: u64,
    /// Largest value the full-theta stage will accept.
    pub full_theta_cap: u64,
}

impl Default for HalmosConfig {
    fn default() -> Self {
        HalmosConfig {
            attempts: rep_checker::DEFAULT_ATTEMPTS,
            wide_attempts: 64,
            full_theta_cap: 1_000_000,
        }
    }
}

/// How many numbers each rung of the ladder settled, summed over rounds.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LadderStats {
    pub checked: usize,
    pub settled_approximate: usize,
    pub settled_exact: usize,
    pub settled_wide: usize,
    pub settled_theta: usize,
    pub exceptions: usize,
}

/// The full verdict: the cover that powered the bitmaps, the closure
/// outcome, and the ladder accounting.
#[derive(Debug)]
pub struct HalmosReport {
    pub cover_d: u64,
    pub cover_ternary: QuadForm,
    pub eligible_primes: usize,
    pub outcome: ClosureOutcome,
    pub stats: LadderStats,
}

impl HalmosReport {
    pub fn exceptions(&self) -> &[u64] {
        &self.outcome.exceptions
    }
}

/// Run the whole pipeline on the Halmos form under the given constants.
pub fn verify_halmos(constants: BoundConstants) -> Result<HalmosReport> {
    verify_halmos_with(constants, &HalmosConfig::default())
}

pub fn verify_halmos_with(
    constants: BoundConstants,
    config: &HalmosConfig,
) -> Result<HalmosReport> {
    let form = halmos_form();
    let cover = find_split_local_cover(&form)?;
    let session = EligibleSession::new(constants, FormProfile::halmos());
    let eligible_primes = session.eligible_primes().len();

    let mut stats = LadderStats::default();
    let outcome = closure_loop(&session, |batch: &[u64]| {
        ladder_unrepresented(&form, &cover, batch, config, &mut stats)
    })
    .map_err(|err| match err {
        ClosureError::Engine(engine) => PipelineError::Engine(engine),
        ClosureError::Checker(checker) => checker,
    })?;

    Ok(HalmosReport {
        cover_d: cover.d,
        cover_ternary: cover.ternary.clone(),
        eligible_primes,
        outcome,
        stats,
    })
}

/// One batch through the ladder; returns the sorted unrepresented subset.
fn ladder_unrepresented(
    form: &QuadForm,
    cover: &SplitLocalCover,
    batch: &[u64],
    config: &HalmosConfig,
    stats: &mut LadderStats,
) -> Result<Vec<u64>> {
    stats.checked += batch.len();
    if batch.is_empty() {
        return Ok(Vec::new());
    }
    let approx = check_numbers(cover, batch, config.attempts, BitsetMode::Approximate)?;
    stats.settled_approximate += batch.len() - approx.unresolved.len();
    if approx.unresolved.is_empty() {
        return Ok(Vec::new());
    }
    let exact = check_numbers(cover, &approx.unresolved, config.attempts, BitsetMode::Exact)?;
    stats.settled_exact += approx.unresolved.len() - exact.unresolved.len();
    if exact.unresolved.is_empty() {
        return Ok(Vec::new());
    }
    let wide = check_numbers(
        cover,
        &exact.unresolved,
        config.wide_attempts,
        BitsetMode::Exact,
    )?;
    stats.settled_wide += exact.unresolved.len() - wide.unresolved.len();
    if wide.unresolved.is_empty() {
        return Ok(Vec::new());
    }
    if let Some(&huge) = wide.unresolved.iter().find(|&&v| v > config.full_theta_cap) {
        return Err(PipelineError::ResourceExhausted {
            what: format!("full-theta fallback on survivor {huge}"),
            cap: config.full_theta_cap,
        });
    }
    let exceptions = resolve_with_full_theta(form, &wide.unresolved);
    stats.settled_theta += wide.unresolved.len() - exceptions.len();
    stats.exceptions += exceptions.len();
    Ok(exceptions)
}

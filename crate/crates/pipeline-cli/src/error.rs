//! Pipeline-level errors: mostly transparent wrappers around the component
//! crates, plus the few verdicts that are genuinely the orchestrator's own
//! (wrong dimension for a stage, a resource cap trip, or an exception family
//! escaping its net, which we refuse to paper over).

use qform_core::QuadForm;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("stage needs a quaternary form, got dimension {0}")]
    NotQuaternary(usize),
    #[error("stage needs a quinary form, got dimension {0}")]
    NotQuinary(usize),
    #[error("stage needs a {expected} classification, got {found}")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },
    #[error("{what} exceeded its cap of {cap}")]
    ResourceExhausted { what: String, cap: u64 },
    #[error(
        "exception family escaped the escalation net for {form:?}: \
         {escaped:?} still unrepresented after {rounds} rounds"
    )]
    FamilyEscape {
        form: Box<QuadForm>,
        escaped: Vec<u64>,
        rounds: usize,
    },
    #[error("pair witness for {pair:?} excepts {found:?} up to {bound}, not the pair")]
    WitnessMismatch {
        pair: (u64, u64),
        bound: u64,
        found: Vec<u64>,
    },
    #[error("witness table mismatch: missing rows {missing:?}, unexpected rows {extra:?}")]
    TableMismatch {
        missing: Vec<(u64, u64, usize)>,
        extra: Vec<(u64, u64, usize)>,
    },
    #[error(transparent)]
    Core(#[from] qform_core::QFormError),
    #[error(transparent)]
    Escalate(#[from] escalator::EscalateError),
    #[error(transparent)]
    Density(#[from] local_densities::DensityError),
    #[error(transparent)]
    Bounds(#[from] eisenstein_bounds::BoundsError),
    #[error(transparent)]
    Engine(#[from] eligible_engine::EngineError),
    #[error(transparent)]
    Check(#[from] rep_checker::CheckError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, PipelineError>;

//! End-to-end orchestration for the excepted-set computations.
//!
//! The component crates each own one technique: escalation trees, local
//! densities, Eisenstein bounds, eligible-number enumeration, and the
//! bitmap representability checker.  This crate strings them together into
//! verdicts.  `classify` sorts a quaternary escalation into Type A (finite
//! exceptions), Type B (an anisotropic prime feeding a geometric exception
//! family), or Type C (a genuine local obstruction); `higher` pushes past
//! dimension four for pair hunts, family taming, and the generalized
//! subform switch; `pairs` owns the 73-row table of possible excepted
//! pairs {m, n} with verified witnesses; and `halmos` runs the flagship
//! computation, certifying that x² + 2y² + 7z² + 13w² represents every
//! positive integer except 5.
//!
//! The binary exposes the same machinery as CLI verbs (`escalate`,
//! `densities`, `eligible`, `check`, `classify`, `pairs`,
//! `verify-halmos`); it exits zero only when every requested verdict is
//! definitive.

mod classify;
mod error;
mod halmos;
mod higher;
mod pairs;

pub use classify::{
    classify, classify_with, exceptions_to, family_contains, family_seeds, local_obstruction,
    ClassifyConfig, Evidence, FamilyEvidence, FormClassification, FormKind, LocalObstruction,
};
pub use error::{PipelineError, Result};
pub use halmos::{
    verify_halmos, verify_halmos_with, HalmosConfig, HalmosReport, LadderStats,
};
pub use higher::{
    higher_escalate_type_a, higher_escalate_type_b, pair_candidates, subform_switch,
    HigherConfig, PairOutcome, SubformSwitch, TypeBOutcome,
};
pub use pairs::{
    builtin_witnesses, emit_table, load_witnesses, mine_witnesses, verify_pair_witness,
    MineConfig, PairRecord, PairWitness, CRITICAL_INTEGERS, PAIR_TABLE,
};

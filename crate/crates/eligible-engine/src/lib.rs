//! Eligible-number machinery for quadratic form exception hunts.
//!
//! A positive definite quaternary form represents every sufficiently
//! large locally represented number; the finite remainder hides among the
//! *eligible numbers*, those `m` whose measure
//! `B(m) = (√m′/τ(m))·∏(p−1)/(p+1)` stays below `C_f/C_E`.  Because `B` is
//! multiplicative and grows like `√p` in each new prime factor, the
//! eligible numbers are generated from a finite list of eligible primes,
//! and the hunt closes out with square augmentation rounds (`s·p²`) on
//! whatever exceptions turn up.
//!
//! For the Halmos form `x² + 2y² + 7z² + 13w²` with its printed constants
//! the machinery yields a few thousand eligible primes and a few hundred
//! thousand squarefree eligible numbers, the largest around `1.8·10¹⁰` —
//! desk scale, by design.
//!
//! * [`FormProfile`] — level, character, anisotropy; defines `B` exactly.
//! * [`EligibleSession`] — thresholds and the eligible prime scan.
//! * [`squarefree_eligible`] — the index-increasing product walk.
//! * [`square_augment`] — the `s·p²` rounds.
//! * [`closure_loop`] — iterate to emptiness against a representability
//!   checker.
//! * [`b_inversions`] — empirical check of the two-miss stopping rule.
//! * [`write_numbers`]/[`read_numbers`] — the `ELG1` on-disk format.

mod augment;
mod bp;
mod closure;
mod error;
mod io;
mod profile;
mod session;
mod squarefree;

pub use augment::square_augment;
pub use bp::{b_inversions, Inversion};
pub use closure::{closure_loop, ClosureOutcome, ClosureRound};
pub use error::{ClosureError, EngineError, Result};
pub use io::{read_numbers, read_numbers_path, write_numbers, write_numbers_path, ELG1_MAGIC};
pub use profile::FormProfile;
pub use session::{
    scan_eligible_primes, EligiblePrime, EligibleSession, DEFAULT_SQUAREFREE_CAP,
};
pub use squarefree::squarefree_eligible;

//! Large-scale representation checking for quaternary forms.
//!
//! Deciding whether Q represents every target in a set of ten or eleven
//! digits is hopeless by direct theta expansion — the series would need as
//! many coefficients as the largest target. The split-local-cover trick
//! sidesteps that: find a sublattice d·x² ⊥ T inside Q whose local behaviour
//! matches Q's everywhere ([`find_split_local_cover`]), tabulate the ternary
//! part T once as a boolean bitmap of width ≈ 2dc√X ([`boolean_theta`]), and
//! then each target costs c bitmap probes ([`check_numbers`]). Hits come
//! with an explicit slice d·x² + T(y) and can be upgraded to a verified
//! vector in Q's own coordinates ([`materialize_witness`]); misses are
//! merely unresolved and fall through a retry ladder ([`resolve_numbers`])
//! that ends with Q's own exact theta walk, so the final verdict never
//! leans on the cover alone.
//!
//! Bitmaps serialize to a small headered format ([`io`]) so expensive exact
//! tabulations can be reused across runs.

mod bitset;
mod check;
mod cover;
mod error;
pub mod io;

pub use bitset::{
    boolean_theta, boolean_theta_with, BitsetMode, RepresentedBitset, ThetaConfig,
    DEFAULT_BITS_CAP, DEFAULT_PRISM_ALPHA,
};
pub use check::{
    check_against, check_numbers, materialize_witness, precision_bound, resolve_numbers,
    resolve_with_full_theta, CheckOutcome, CheckedNumber, ResolveOutcome, DEFAULT_ATTEMPTS,
};
pub use cover::{find_split_local_cover, find_split_local_cover_with, CoverConfig, SplitLocalCover};
pub use error::{CheckError, Result};

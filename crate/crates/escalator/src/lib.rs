//! Escalation lattices for prescribed exception sets: raw truant-driven
//! extensions, equivalence-class deduplication, and the breadth-first
//! escalator tree walk that turns a target set like {5} into a finite list
//! of candidate forms.

mod dedup;
mod error;
mod escalate;
mod tree;

pub use dedup::dedup;
pub use error::{EscalateError, Result};
pub use escalate::escalations;
pub use tree::{escalate_tree, EscalationNode, EscalatorTree, LevelStats, NodeStatus};

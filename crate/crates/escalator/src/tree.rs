//! Breadth-first escalator trees for a prescribed exception target.
//!
//! Starting from the trivial lattice, each level escalates every node that
//! still has a truant, dedups the raw escalations into classes, prunes the
//! classes that represent an element of the target set, and computes
//! truants for the survivors. Nodes whose truant search exhausts the cap
//! become candidates — forms that plausibly except exactly the target set
//! and are handed to the analytic machinery for proof.

use crate::dedup::dedup;
use crate::error::Result;
use crate::escalate::escalations;
use qform_core::{ExceptionSet, QuadForm};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeStatus {
    /// Has a truant; escalated further unless the depth cap intervened.
    Escalated,
    /// Represents every integer outside the target up to the truant cap.
    Candidate,
    /// Represents an element of the target set; removed from the tree walk.
    Pruned,
}

#[derive(Debug, Clone)]
pub struct EscalationNode {
    pub form: QuadForm,
    pub parent: Option<usize>,
    pub truant: Option<u64>,
    pub status: NodeStatus,
    pub depth: usize,
}

/// Counts for one level of the walk. `classes` dedups the raw escalations
/// before pruning; `survivors` is what is left after pruning, and splits
/// into `escalated` (truant found) plus `candidates` (cap exhausted).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LevelStats {
    pub dim: usize,
    pub raw: usize,
    pub classes: usize,
    pub survivors: usize,
    pub escalated: usize,
    pub candidates: usize,
}

#[derive(Debug)]
pub struct EscalatorTree {
    pub target: ExceptionSet,
    pub truant_cap: u64,
    pub nodes: Vec<EscalationNode>,
    pub stats: Vec<LevelStats>,
}

impl EscalatorTree {
    pub fn candidates(&self) -> impl Iterator<Item = &EscalationNode> {
        self.nodes
            .iter()
            .filter(|n| n.status == NodeStatus::Candidate)
    }

    pub fn level(&self, depth: usize) -> impl Iterator<Item = &EscalationNode> {
        self.nodes.iter().filter(move |n| n.depth == depth)
    }

    /// Truants seen anywhere in the tree, sorted and deduplicated.
    pub fn truant_set(&self) -> Vec<u64> {
        let mut ts: Vec<u64> = self.nodes.iter().filter_map(|n| n.truant).collect();
        ts.sort_unstable();
        ts.dedup();
        ts
    }
}

#[derive(Serialize, Deserialize)]
struct NodeJson {
    dim: usize,
    gram: Vec<Vec<i64>>,
    truant: Option<u64>,
    parent: Option<usize>,
    status: NodeStatus,
}

impl EscalatorTree {
    /// One node per line: form, truant, parent index, status.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<()> {
        for node in &self.nodes {
            let line = serde_json::to_string(&NodeJson {
                dim: node.form.dim(),
                gram: node.form.gram_rows(),
                truant: node.truant,
                parent: node.parent,
                status: node.status,
            })?;
            writeln!(out, "{}", line)?;
        }
        Ok(())
    }
}

/// Build the escalator tree for target `s`, up to `max_dim` variables,
/// searching truants up to `truant_cap`.
pub fn escalate_tree(s: &ExceptionSet, max_dim: usize, truant_cap: u64) -> Result<EscalatorTree> {
    let root_truant = (1..).find(|m| !s.contains(*m)).expect("finite target");
    let mut nodes = vec![EscalationNode {
        form: QuadForm::trivial(),
        parent: None,
        truant: Some(root_truant),
        status: NodeStatus::Escalated,
        depth: 0,
    }];
    let mut stats = Vec::new();
    let mut frontier: Vec<usize> = vec![0];

    for depth in 1..=max_dim {
        // raw escalations, deterministic parent-major order
        let mut raw: Vec<(usize, QuadForm)> = Vec::new();
        for &idx in &frontier {
            let t = nodes[idx].truant.expect("frontier nodes have truants");
            for form in escalations(&nodes[idx].form, t)? {
                raw.push((idx, form));
            }
        }
        let forms: Vec<QuadForm> = raw.iter().map(|(_, f)| f.clone()).collect();
        let reps = dedup(&forms)?;
        let classes = reps.len();

        // prune classes that represent a target element
        let verdicts: Vec<bool> = reps
            .par_iter()
            .map(|q| s.iter().any(|m| q.is_represented(m)))
            .collect();
        let mut survivors = Vec::new();
        let mut next_frontier = Vec::new();
        let mut n_esc = 0;
        let mut n_cand = 0;
        let parent_of = |form: &QuadForm| -> usize {
            raw.iter()
                .find(|(_, f)| f.gram() == form.gram())
                .map(|(p, _)| *p)
                .expect("dedup representative came from the raw list")
        };
        for (rep, &hits_target) in reps.iter().zip(&verdicts) {
            if hits_target {
                nodes.push(EscalationNode {
                    form: rep.clone(),
                    parent: Some(parent_of(rep)),
                    truant: None,
                    status: NodeStatus::Pruned,
                    depth,
                });
            } else {
                survivors.push(rep.clone());
            }
        }
        let truants: Vec<Option<u64>> = survivors
            .par_iter()
            .map(|q| q.truant(s, truant_cap))
            .collect::<qform_core::Result<_>>()?;
        for (rep, truant) in survivors.iter().zip(&truants) {
            let status = match truant {
                Some(_) => {
                    n_esc += 1;
                    NodeStatus::Escalated
                }
                None => {
                    n_cand += 1;
                    NodeStatus::Candidate
                }
            };
            let node = EscalationNode {
                form: rep.clone(),
                parent: Some(parent_of(rep)),
                truant: *truant,
                status,
                depth,
            };
            if node.status == NodeStatus::Escalated {
                next_frontier.push(nodes.len());
            }
            nodes.push(node);
        }
        stats.push(LevelStats {
            dim: depth,
            raw: raw.len(),
            classes,
            survivors: survivors.len(),
            escalated: n_esc,
            candidates: n_cand,
        });
        frontier = next_frontier;
        if frontier.is_empty() {
            break;
        }
    }

    Ok(EscalatorTree {
        target: s.clone(),
        truant_cap,
        nodes,
        stats,
    })
}

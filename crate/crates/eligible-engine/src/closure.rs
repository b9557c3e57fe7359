//! The exception closure loop.
//!
//! Round one checks every squarefree eligible number against a
//! representability oracle; the unrepresented ones form `S₁`.  Each later
//! round augments the previous round's new exceptions by eligible squares
//! (`s·p²`) and checks the candidates, continuing until a round produces
//! nothing new.  The union of all rounds is the complete exception set of
//! the form, assuming the analytic constants behind the session are valid
//! for it.
//!
//! The checker is any `FnMut(&[u64]) -> Result<Vec<u64>, E>` returning the
//! subset of its input that is *not* represented.  Checker failures abort
//! the loop and surface as [`ClosureError::Checker`].

use crate::error::ClosureError;
use crate::session::EligibleSession;

/// One round of the closure loop, for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureRound {
    /// How many candidate numbers were handed to the checker.
    pub candidates: usize,
    /// The candidates the checker reported as unrepresented.
    pub new_exceptions: Vec<u64>,
}

/// The closure loop's verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureOutcome {
    /// Union of all rounds' exceptions, ascending.
    pub exceptions: Vec<u64>,
    /// Per-round bookkeeping, starting with the squarefree round.
    pub rounds: Vec<ClosureRound>,
}

/// Run the closure loop to emptiness and return every exception found.
pub fn closure_loop<C, E>(
    session: &EligibleSession,
    mut unrepresented: C,
) -> Result<ClosureOutcome, ClosureError<E>>
where
    C: FnMut(&[u64]) -> Result<Vec<u64>, E>,
{
    let mut rounds = Vec::new();
    let mut union: Vec<u64> = Vec::new();

    let squarefree = session.squarefree_eligible()?;
    let mut frontier = unrepresented(&squarefree).map_err(ClosureError::Checker)?;
    frontier.sort_unstable();
    frontier.dedup();
    rounds.push(ClosureRound {
        candidates: squarefree.len(),
        new_exceptions: frontier.clone(),
    });
    union.extend_from_slice(&frontier);

    while !frontier.is_empty() {
        let mut candidates = session.square_augment(&frontier)?;
        // A candidate still open is one we have not already recorded.
        candidates.retain(|value| !union.contains(value));
        let mut fresh = unrepresented(&candidates).map_err(ClosureError::Checker)?;
        fresh.sort_unstable();
        fresh.dedup();
        rounds.push(ClosureRound {
            candidates: candidates.len(),
            new_exceptions: fresh.clone(),
        });
        union.extend_from_slice(&fresh);
        frontier = fresh;
    }

    union.sort_unstable();
    Ok(ClosureOutcome {
        exceptions: union,
        rounds,
    })
}

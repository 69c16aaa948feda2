use std::fmt;

use crate::chromosome::{Adjacency, Chromosome, ReversalTrace, Symbol};
use crate::error::{Error, Result};
use crate::{dp2, general};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoReason {
    /// Some adjacency occurs a different number of times in the two chromosomes.
    MultisetMismatch { witness: Adjacency },
    /// A vertex that must be reversed lies in a component without any black vertex.
    Stranded { repeat: Symbol },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No(NoReason),
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes)
    }
}

impl fmt::Display for NoReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NoReason::MultisetMismatch { witness } => {
                write!(f, "adjacency multisets differ (witness {witness})")
            }
            NoReason::Stranded { repeat } => {
                write!(f, "repeat {repeat} is stranded in a component without black vertices")
            }
        }
    }
}

pub(crate) fn multiset_check(pi: &Chromosome, tau: &Chromosome) -> Option<NoReason> {
    let a = pi.adjacency_multiset();
    let b = tau.adjacency_multiset();
    a.first_difference(&b).map(|witness| NoReason::MultisetMismatch { witness })
}

pub(crate) fn require_related(pi: &Chromosome, tau: &Chromosome) -> Result<()> {
    if pi.is_related(tau) {
        Ok(())
    } else {
        Err(Error::Unrelated)
    }
}

/// Decides whether `pi` can be turned into `tau` by symmetric reversals.
pub fn decide(pi: &Chromosome, tau: &Chromosome) -> Result<Decision> {
    general::decide_general(pi, tau)
}

/// Produces a reversal trace from `pi` to `tau`, choosing the dp=2 or the
/// general sorter by duplication number.
pub fn sort(pi: &Chromosome, tau: &Chromosome) -> Result<ReversalTrace> {
    require_related(pi, tau)?;
    if pi.dp() <= 2 {
        dp2::sort_dp2(pi, tau)
    } else {
        general::sort_general(pi, tau)
    }
}

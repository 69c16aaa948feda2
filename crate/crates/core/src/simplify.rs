//! Deletion of redundant repeats for duplication number 2.
//!
//! Two repeats are redundant when an adjacency between them occurs twice.
//! Reversals on either member act identically, so one member can be dropped
//! from both chromosomes and re-inserted when lifting a trace.
//!
//! Duplicated adjacencies touching the sentinel (`[+r0, +a, ..., -a, -r0]`)
//! are left in place: the sentinel cannot be deleted, and the pair only
//! makes the repeat `a` equivalent to the whole-chromosome flip.

use std::collections::{BTreeSet, HashMap};

use crate::chromosome::{Adjacency, Chromosome, ReversalTrace, Symbol, SENTINEL};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RedundantPair {
    pub kept: Symbol,
    pub deleted: Symbol,
    pub witness: Adjacency,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplified {
    pub pi: Chromosome,
    pub tau: Chromosome,
    pub log: Vec<RedundantPair>,
}

/// Leftmost slot of `c` holding a duplicated adjacency that does not touch
/// the sentinel.
pub fn first_duplicated_slot(c: &Chromosome) -> Option<usize> {
    let adj = c.adjacencies();
    let mut counts: HashMap<&Adjacency, usize> = HashMap::new();
    for a in &adj {
        *counts.entry(a).or_insert(0) += 1;
    }
    (0..adj.len()).find(|&s| counts[&adj[s]] > 1 && !adj[s].involves(SENTINEL))
}

/// No adjacency occurs twice, apart from the sentinel exception.
pub fn is_simple(c: &Chromosome) -> bool {
    first_duplicated_slot(c).is_none()
}

fn without(c: &Chromosome, symbol: &str) -> Chromosome {
    let interior = c.interior().iter().filter(|t| &*t.symbol != symbol).cloned().collect();
    Chromosome::from_interior(interior).expect("removing a non-sentinel keeps sentinels valid")
}

pub fn simplify_pair(pi: &Chromosome, tau: &Chromosome) -> Result<Simplified> {
    if pi.adjacency_multiset() != tau.adjacency_multiset() {
        return Err(Error::MultisetMismatch);
    }
    for c in [pi, tau] {
        let dp = c.dp();
        if dp > 2 {
            return Err(Error::DpTooLarge { found: dp, max: 2 });
        }
    }
    let mut p = pi.clone();
    let mut t = tau.clone();
    let mut log = Vec::new();
    while let Some(s) = first_duplicated_slot(&p) {
        let kept = p.tokens()[s].symbol.clone();
        let deleted = p.tokens()[s + 1].symbol.clone();
        if kept == deleted {
            return Err(Error::InvalidInstance(format!("self-redundant repeat `{kept}`")));
        }
        let witness = p.adjacency_at(s);
        p = without(&p, &deleted);
        t = without(&t, &deleted);
        log.push(RedundantPair { kept, deleted, witness });
    }
    Ok(Simplified { pi: p, tau: t, log })
}

/// Maps a trace on the simplified chromosome back onto `original`.
pub fn lift_trace(
    simplified_trace: &ReversalTrace,
    log: &[RedundantPair],
    original: &Chromosome,
) -> Result<ReversalTrace> {
    let deleted: BTreeSet<&str> = log.iter().map(|r| &*r.deleted).collect();
    let dup = original.duplication_numbers();
    for r in log {
        if dup.get(&r.deleted) != Some(&2) {
            return Err(Error::InvalidLog(format!("`{}` does not occur twice", r.deleted)));
        }
        if !dup.contains_key(&r.kept) && &*r.kept != SENTINEL {
            return Err(Error::InvalidLog(format!("`{}` does not occur", r.kept)));
        }
    }
    let mut full = original.clone();
    let mut small = {
        let interior =
            original.interior().iter().filter(|t| !deleted.contains(&*t.symbol)).cloned().collect();
        Chromosome::from_interior(interior)?
    };
    let mut steps = Vec::with_capacity(simplified_trace.len());
    for (k, &(i, j)) in simplified_trace.steps.iter().enumerate() {
        small.reverse_in_place(i, j).map_err(|e| Error::TraceStep { step: k + 1, source: Box::new(e) })?;
        let kept_pos: Vec<usize> =
            (0..full.tokens().len()).filter(|&p| !deleted.contains(&*full.tokens()[p].symbol)).collect();
        let (a, b) = (kept_pos[i], kept_pos[j]);
        full.reverse_in_place(a, b).map_err(|e| Error::InvalidLog(format!("lifted step {}: {e}", k + 1)))?;
        steps.push((a, b));
    }
    Ok(ReversalTrace::new(steps))
}

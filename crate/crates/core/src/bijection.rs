//! Bijections between identical adjacencies of two chromosomes.

use std::collections::{HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::chromosome::Chromosome;
use crate::code::{encode_pair, Coded};
use crate::error::{Error, Result};

/// Maps every adjacency slot `i` of π (0..=n) to a slot of τ carrying the
/// identical unordered end-node pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyBijection {
    pub mapping: Vec<usize>,
}

impl AdjacencyBijection {
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.mapping.len()];
        for (s, &t) in self.mapping.iter().enumerate() {
            inv[t] = s;
        }
        inv
    }

    pub fn is_valid_for(&self, pi: &Chromosome, tau: &Chromosome) -> bool {
        let (_, p, t) = encode_pair(pi, tau);
        valid_coded(&p, &t, &self.mapping)
    }
}

/// Left-to-right matching: the k-th copy of an adjacency in π is paired
/// with its k-th copy in τ.
pub fn build_bijection(pi: &Chromosome, tau: &Chromosome) -> Result<AdjacencyBijection> {
    let (_, p, t) = encode_pair(pi, tau);
    let mapping = match_slots(&p, &t).ok_or(Error::MultisetMismatch)?;
    Ok(AdjacencyBijection { mapping })
}

/// Uniformly random matching among identical adjacencies.
pub fn build_bijection_random<R: Rng + ?Sized>(
    pi: &Chromosome,
    tau: &Chromosome,
    rng: &mut R,
) -> Result<AdjacencyBijection> {
    let (_, p, t) = encode_pair(pi, tau);
    let mut mapping = match_slots(&p, &t).ok_or(Error::MultisetMismatch)?;
    shuffle_within_classes(&p, &mut mapping, rng);
    Ok(AdjacencyBijection { mapping })
}

pub(crate) fn match_slots(p: &Coded, t: &Coded) -> Option<Vec<usize>> {
    if p.sym.len() != t.sym.len() {
        return None;
    }
    let mut queues: HashMap<u64, VecDeque<usize>> = HashMap::with_capacity(t.sym.len());
    for s in 0..=t.n() {
        queues.entry(t.adj_key(s)).or_default().push_back(s);
    }
    let mut mapping = Vec::with_capacity(p.n() + 1);
    for s in 0..=p.n() {
        mapping.push(queues.get_mut(&p.adj_key(s))?.pop_front()?);
    }
    Some(mapping)
}

pub(crate) fn shuffle_within_classes<R: Rng + ?Sized>(p: &Coded, mapping: &mut [usize], rng: &mut R) {
    let mut classes: HashMap<u64, Vec<usize>> = HashMap::new();
    for s in 0..mapping.len() {
        classes.entry(p.adj_key(s)).or_default().push(s);
    }
    let mut keys: Vec<_> = classes.keys().copied().collect();
    keys.sort_unstable();
    for k in keys {
        let slots = &classes[&k];
        if slots.len() < 2 {
            continue;
        }
        let mut targets: Vec<usize> = slots.iter().map(|&s| mapping[s]).collect();
        targets.shuffle(rng);
        for (&s, t) in slots.iter().zip(targets) {
            mapping[s] = t;
        }
    }
}

pub(crate) fn valid_coded(p: &Coded, t: &Coded, mapping: &[usize]) -> bool {
    if p.sym.len() != t.sym.len() || mapping.len() != p.n() + 1 {
        return false;
    }
    let mut seen = vec![false; mapping.len()];
    for (s, &j) in mapping.iter().enumerate() {
        if j >= seen.len() || seen[j] || p.adj_key(s) != t.adj_key(j) {
            return false;
        }
        seen[j] = true;
    }
    true
}

/// Node-level alignment `phi`: π node position to τ node position. Inside a
/// slot the two nodes are matched by label; entangled slots (equal labels)
/// are matched straight.
pub(crate) fn node_map(p: &Coded, t: &Coded, mapping: &[usize]) -> Vec<usize> {
    let m = p.sym.len() * 2;
    let mut phi = vec![0; m];
    phi[0] = 0;
    phi[m - 1] = m - 1;
    for (s, &j) in mapping.iter().enumerate() {
        let a = p.right(s);
        let c = t.right(j);
        if a == c {
            phi[2 * s + 1] = 2 * j + 1;
            phi[2 * s + 2] = 2 * j + 2;
        } else {
            phi[2 * s + 1] = 2 * j + 2;
            phi[2 * s + 2] = 2 * j + 1;
        }
    }
    phi
}

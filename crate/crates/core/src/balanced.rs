//! Optimal sorting when every repeat occurs twice and the target holds each
//! repeat once in each orientation.
//!
//! Each adjacency of π is matched to its unique copy in τ and labeled
//! positive (same node order) or negative (swapped). The minimum number of
//! reversals is the number of maximal negative runs.

use std::fmt;

use crate::bijection::match_slots;
use crate::chromosome::{Chromosome, ReversalTrace, SignedToken};
use crate::code::{encode_pair, Coded};
use crate::decision::require_related;
use crate::error::{Error, Result};
use crate::simplify::is_simple;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Positive,
    Negative,
    Entangled,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Positive => "+",
            Direction::Negative => "-",
            Direction::Entangled => "~",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdjacencyDirection {
    /// Adjacency slot in π, `0..=n`.
    pub index: usize,
    pub direction: Direction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub positive: bool,
    pub first_slot: usize,
    pub last_slot: usize,
}

impl Segment {
    /// Occurrence positions covered: `first_slot ..= last_slot + 1`.
    pub fn occurrences(&self) -> std::ops::RangeInclusive<usize> {
        self.first_slot..=self.last_slot + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentDecomposition {
    pub segments: Vec<Segment>,
    /// Occurrence positions whose two flanking adjacencies differ.
    pub boundaries: Vec<usize>,
}

impl SegmentDecomposition {
    pub fn n_mps(&self) -> usize {
        self.segments.iter().filter(|s| s.positive).count()
    }

    pub fn n_mns(&self) -> usize {
        self.segments.iter().filter(|s| !s.positive).count()
    }

    /// Checks that each positive run occurs verbatim in `tau` and each
    /// negative run occurs reversed and negated.
    pub fn check_against(&self, pi: &Chromosome, tau: &Chromosome) -> Result<()> {
        let hay = tau.tokens();
        for seg in &self.segments {
            let mut piece: Vec<SignedToken> = pi.tokens()[seg.occurrences()].to_vec();
            if !seg.positive {
                piece.reverse();
                piece.iter_mut().for_each(|t| *t = t.negated());
            }
            if !hay.windows(piece.len()).any(|w| w == piece.as_slice()) {
                return Err(Error::ProgressFailure(format!(
                    "segment at slots {}..={} has no matching copy in the target",
                    seg.first_slot, seg.last_slot
                )));
            }
        }
        Ok(())
    }
}

/// Both chromosomes are related, have duplication number exactly 2, share
/// their adjacency multiset, are simple, and every
/// repeat occurs in `tau` once in each orientation.
pub fn check_balanced(pi: &Chromosome, tau: &Chromosome) -> Result<()> {
    require_related(pi, tau)?;
    let dp = pi.dp();
    if dp > 2 {
        return Err(Error::DpTooLarge { found: dp, max: 2 });
    }
    let am = pi.adjacency_multiset();
    if am != tau.adjacency_multiset() {
        return Err(Error::MultisetMismatch);
    }
    if !is_simple(pi) {
        return Err(Error::NotSimple);
    }
    for (sym, &count) in &tau.duplication_numbers() {
        if count == 2 {
            let pos = tau.positions_of(sym);
            if tau.tokens()[pos[0]].orientation == tau.tokens()[pos[1]].orientation {
                return Err(Error::NotBalanced(sym.to_string()));
            }
        }
    }
    if dp != 2 {
        return Err(Error::InvalidInstance("duplication number is not 2".into()));
    }
    Ok(())
}

pub fn is_balanced(pi: &Chromosome, tau: &Chromosome) -> bool {
    check_balanced(pi, tau).is_ok()
}

fn raw_coded(p: &Coded, t: &Coded) -> Result<Vec<Direction>> {
    let mapping = match_slots(p, t).ok_or(Error::MultisetMismatch)?;
    Ok(mapping
        .iter()
        .enumerate()
        .map(|(s, &j)| {
            let (a, b) = (p.right(s), p.left(s + 1));
            if a == b {
                Direction::Entangled
            } else if a == t.right(j) {
                Direction::Positive
            } else {
                Direction::Negative
            }
        })
        .collect())
}

fn resolve(raw: &mut [Direction]) {
    let mut last = Direction::Positive;
    for d in raw.iter_mut() {
        if *d == Direction::Entangled {
            *d = last;
        } else {
            last = *d;
        }
    }
}

fn coded_directions(p: &Coded, t: &Coded) -> Result<Vec<Direction>> {
    let mut d = raw_coded(p, t)?;
    resolve(&mut d);
    Ok(d)
}

/// Directions before entangled resolution.
pub fn raw_directions(pi: &Chromosome, tau: &Chromosome) -> Result<Vec<AdjacencyDirection>> {
    check_balanced(pi, tau)?;
    let (_, p, t) = encode_pair(pi, tau);
    Ok(wrap(raw_coded(&p, &t)?))
}

/// Directions of every adjacency of `pi`, with each entangled adjacency
/// taking the direction of its left neighbour.
pub fn assign_directions(pi: &Chromosome, tau: &Chromosome) -> Result<Vec<AdjacencyDirection>> {
    check_balanced(pi, tau)?;
    let (_, p, t) = encode_pair(pi, tau);
    Ok(wrap(coded_directions(&p, &t)?))
}

fn wrap(d: Vec<Direction>) -> Vec<AdjacencyDirection> {
    d.into_iter().enumerate().map(|(index, direction)| AdjacencyDirection { index, direction }).collect()
}

pub fn decompose_segments(dirs: &[AdjacencyDirection]) -> SegmentDecomposition {
    let d: Vec<Direction> = dirs.iter().map(|a| a.direction).collect();
    decompose(&d)
}

fn decompose(d: &[Direction]) -> SegmentDecomposition {
    let mut segments: Vec<Segment> = Vec::new();
    let mut boundaries = Vec::new();
    for (s, &dir) in d.iter().enumerate() {
        let positive = dir != Direction::Negative;
        match segments.last_mut() {
            Some(seg) if seg.positive == positive => seg.last_slot = s,
            _ => {
                if s > 0 {
                    boundaries.push(s);
                }
                segments.push(Segment { positive, first_slot: s, last_slot: s });
            }
        }
    }
    SegmentDecomposition { segments, boundaries }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedRun {
    pub trace: ReversalTrace,
    /// Whether the whole flip `(0, n+1)` was prepended to normalize directions.
    pub flipped: bool,
    /// Negative-run count before each step and after the last, on the
    /// normalized chromosome.
    pub mns_history: Vec<usize>,
}

/// Boundary pair `(i, j)` of one repeat with opposite orientations whose
/// left boundary is leftmost.
fn boundary_pair(p: &Coded, dec: &SegmentDecomposition) -> Result<(usize, usize)> {
    let mut is_boundary = vec![false; p.sym.len()];
    for &b in &dec.boundaries {
        is_boundary[b] = true;
    }
    let mut partner = vec![usize::MAX; p.sym.len()];
    let mut first = std::collections::HashMap::new();
    for i in 1..=p.n() {
        if let Some(&k) = first.get(&p.sym[i]) {
            partner[i] = k;
            partner[k] = i;
        } else {
            first.insert(p.sym[i], i);
        }
    }
    for &b in &dec.boundaries {
        let o = partner[b];
        if o == usize::MAX || !is_boundary[o] {
            return Err(Error::ProgressFailure(format!("boundary at {b} lacks a boundary partner")));
        }
    }
    dec.boundaries
        .iter()
        .copied()
        .find(|&b| partner[b] > b && p.plus[b] != p.plus[partner[b]])
        .map(|b| (b, partner[b]))
        .ok_or_else(|| Error::ProgressFailure("no opposite boundary pair".into()))
}

/// Minimum-length trace from `pi` to `tau` for 2-balanced inputs.
pub fn solve_balanced2(pi: &Chromosome, tau: &Chromosome) -> Result<BalancedRun> {
    check_balanced(pi, tau)?;
    let (_, mut p, t) = encode_pair(pi, tau);
    let mut steps = Vec::new();
    let mut d = coded_directions(&p, &t)?;
    let flipped = d[0] == Direction::Negative;
    if flipped {
        let last = p.sym.len() - 1;
        p.reverse(0, last);
        steps.push((0, last));
        d = coded_directions(&p, &t)?;
    }
    let mut dec = decompose(&d);
    let mut history = vec![dec.n_mns()];
    while dec.n_mns() > 0 {
        if dec.n_mps() != dec.n_mns() + 1 {
            return Err(Error::ProgressFailure("positive and negative runs do not alternate".into()));
        }
        let (i, j) = boundary_pair(&p, &dec)?;
        p.reverse(i, j);
        steps.push((i, j));
        dec = decompose(&coded_directions(&p, &t)?);
        let before = *history.last().expect("history starts non-empty");
        if dec.n_mns() + 1 != before {
            return Err(Error::ProgressFailure(format!(
                "reversal ({i}, {j}) changed the negative-run count from {before} to {}",
                dec.n_mns()
            )));
        }
        history.push(dec.n_mns());
    }
    if p != t {
        return Err(Error::ProgressFailure("no negative runs left but chromosomes differ".into()));
    }
    Ok(BalancedRun { trace: ReversalTrace::new(steps), flipped, mns_history: history })
}

/// Negative-run count after normalization plus one if a flip is needed; the
/// length of [`solve_balanced2`]'s trace.
pub fn balanced_distance(pi: &Chromosome, tau: &Chromosome) -> Result<usize> {
    check_balanced(pi, tau)?;
    let (_, mut p, t) = encode_pair(pi, tau);
    let d = coded_directions(&p, &t)?;
    if d[0] == Direction::Negative {
        let last = p.sym.len() - 1;
        p.reverse(0, last);
        return Ok(1 + decompose(&coded_directions(&p, &t)?).n_mns());
    }
    Ok(decompose(&d).n_mns())
}

use std::collections::HashMap;

use crate::chromosome::{Chromosome, ReversalTrace};
use crate::code::{encode_pair, Coded};
use crate::decision::require_related;
use crate::error::Result;

pub const DEFAULT_STATE_CAP: usize = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Reachable,
    Unreachable,
    CapExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSpaceResult {
    pub status: SearchStatus,
    pub reachable: bool,
    pub distance: Option<usize>,
    /// Lexicographically least shortest trace.
    pub witness: Option<ReversalTrace>,
    pub explored: usize,
}

type State = Box<[i32]>;

fn to_state(c: &Coded) -> State {
    c.sym.iter().zip(&c.plus).map(|(&s, &p)| if p { s as i32 + 1 } else { -(s as i32 + 1) }).collect()
}

/// Successors in lexicographic order of `(i, j)`; the whole flip `(0, n+1)`
/// comes first.
fn successors(s: &[i32], mut visit: impl FnMut(usize, usize, State) -> bool) {
    let last = s.len() - 1;
    let apply = |i: usize, j: usize| {
        let mut v: State = s.into();
        v[i..=j].reverse();
        for x in &mut v[i..=j] {
            *x = -*x;
        }
        v
    };
    if !visit(0, last, apply(0, last)) {
        return;
    }
    for i in 1..last {
        for j in i + 1..last {
            if s[i] == -s[j] && !visit(i, j, apply(i, j)) {
                return;
            }
        }
    }
}

/// Exhaustive breadth-first search over symmetric reversals.
pub fn bfs_distance(pi: &Chromosome, tau: &Chromosome, state_cap: usize) -> Result<StateSpaceResult> {
    require_related(pi, tau)?;
    let (_, p, t) = encode_pair(pi, tau);
    let start = to_state(&p);
    let goal = to_state(&t);
    if start == goal {
        return Ok(StateSpaceResult {
            status: SearchStatus::Reachable,
            reachable: true,
            distance: Some(0),
            witness: Some(ReversalTrace::default()),
            explored: 1,
        });
    }
    let mut states: Vec<State> = vec![start.clone()];
    let mut parent: Vec<(u32, u32, u32)> = vec![(0, 0, 0)];
    let mut index: HashMap<State, u32> = HashMap::new();
    index.insert(start, 0);
    let mut head = 0;
    let mut found = None;
    let mut capped = false;
    while head < states.len() && found.is_none() && !capped {
        let cur = states[head].clone();
        successors(&cur, |i, j, next| {
            if index.contains_key(&next) {
                return true;
            }
            if states.len() >= state_cap {
                capped = true;
                return false;
            }
            let id = states.len() as u32;
            index.insert(next.clone(), id);
            parent.push((head as u32, i as u32, j as u32));
            let hit = next == goal;
            states.push(next);
            if hit {
                found = Some(id);
                return false;
            }
            true
        });
        head += 1;
    }
    let explored = states.len();
    Ok(match found {
        Some(id) => {
            let mut steps = Vec::new();
            let mut k = id as usize;
            while k != 0 {
                let (pa, i, j) = parent[k];
                steps.push((i as usize, j as usize));
                k = pa as usize;
            }
            steps.reverse();
            StateSpaceResult {
                status: SearchStatus::Reachable,
                reachable: true,
                distance: Some(steps.len()),
                witness: Some(ReversalTrace::new(steps)),
                explored,
            }
        }
        None => StateSpaceResult {
            status: if capped { SearchStatus::CapExceeded } else { SearchStatus::Unreachable },
            reachable: false,
            distance: None,
            witness: None,
            explored,
        },
    })
}

/// Every chromosome reachable from `start`, or `None` past `state_cap`.
pub fn reachable_set(start: &Chromosome, state_cap: usize) -> Option<Vec<Chromosome>> {
    let (it, p, _) = encode_pair(start, start);
    let mut states: Vec<State> = vec![to_state(&p)];
    let mut seen: HashMap<State, ()> = HashMap::new();
    seen.insert(states[0].clone(), ());
    let mut head = 0;
    while head < states.len() {
        let cur = states[head].clone();
        let mut over = false;
        successors(&cur, |_, _, next| {
            if seen.contains_key(&next) {
                return true;
            }
            if states.len() >= state_cap {
                over = true;
                return false;
            }
            seen.insert(next.clone(), ());
            states.push(next);
            true
        });
        if over {
            return None;
        }
        head += 1;
    }
    Some(
        states
            .iter()
            .map(|s| {
                let c = Coded {
                    sym: s.iter().map(|&x| x.unsigned_abs() - 1).collect(),
                    plus: s.iter().map(|&x| x > 0).collect(),
                };
                c.decode(&it)
            })
            .collect(),
    )
}

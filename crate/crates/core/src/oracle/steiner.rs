use super::circle::CircleGraphInstance;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerSolution {
    pub k: usize,
    /// Chosen non-terminal vertices, ascending.
    pub set: Vec<usize>,
    /// Search nodes visited.
    pub explored: usize,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

fn roots(g: &CircleGraphInstance, chosen: &[usize]) -> (Vec<bool>, UnionFind) {
    let mut inside = vec![false; g.len()];
    for &v in g.terminals.iter().chain(chosen) {
        inside[v] = true;
    }
    let mut uf = UnionFind::new(g.len());
    for (u, v) in g.edges() {
        if inside[u] && inside[v] {
            uf.union(u, v);
        }
    }
    (inside, uf)
}

/// Whether terminals plus `chosen` induce a connected subgraph.
pub fn connects(g: &CircleGraphInstance, chosen: &[usize]) -> bool {
    let (inside, mut uf) = roots(g, chosen);
    let mut r = (0..g.len()).filter(|&v| inside[v]).map(|v| uf.find(v));
    let first = r.next();
    r.all(|x| Some(x) == first)
}

/// Whether all terminals fall in one component of the graph induced by the
/// terminals and `chosen`.
pub fn links_terminals(g: &CircleGraphInstance, chosen: &[usize]) -> bool {
    let (_, mut uf) = roots(g, chosen);
    let mut r = g.terminals.iter().map(|&v| uf.find(v));
    let first = r.next();
    r.all(|x| Some(x) == first)
}

struct Search<'a> {
    nb: &'a [Vec<usize>],
    terminal: Vec<bool>,
    explored: usize,
}

impl Search<'_> {
    /// Depth-bounded search. Some unconnected terminal component must gain a
    /// chosen neighbour, so branching over the neighbours of the component
    /// with fewest options is complete; earlier siblings are banned in later
    /// branches so each set is visited once.
    fn dfs(&mut self, chosen: &mut Vec<usize>, banned: &mut Vec<bool>, budget: usize) -> bool {
        self.explored += 1;
        let n = self.nb.len();
        let mut inside = self.terminal.clone();
        for &v in chosen.iter() {
            inside[v] = true;
        }
        let mut comp = vec![usize::MAX; n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if !inside[s] || comp[s] != usize::MAX {
                continue;
            }
            let id = comps.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut k = 0;
            while k < members.len() {
                let u = members[k];
                k += 1;
                for &v in &self.nb[u] {
                    if inside[v] && comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                    }
                }
            }
            comps.push(members);
        }
        if comps.len() <= 1 {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let mut best: Option<Vec<usize>> = None;
        for members in &comps {
            let mut opts: Vec<usize> = members
                .iter()
                .flat_map(|&u| self.nb[u].iter().copied())
                .filter(|&v| !inside[v] && !banned[v])
                .collect();
            opts.sort_unstable();
            opts.dedup();
            if best.as_ref().is_none_or(|b| opts.len() < b.len()) {
                best = Some(opts);
            }
        }
        let opts = best.unwrap_or_default();
        let mut newly_banned = Vec::new();
        let mut ok = false;
        for &v in &opts {
            chosen.push(v);
            if self.dfs(chosen, banned, budget - 1) {
                ok = true;
                break;
            }
            chosen.pop();
            banned[v] = true;
            newly_banned.push(v);
        }
        for v in newly_banned {
            banned[v] = false;
        }
        ok
    }
}

/// Minimum number of non-terminal vertices connecting all terminals, by
/// iterative deepening.
pub fn steiner_exact(g: &CircleGraphInstance) -> Result<SteinerSolution> {
    let all: Vec<usize> = (0..g.len()).filter(|&v| !g.is_terminal(v)).collect();
    if !links_terminals(g, &all) {
        return Err(Error::InvalidInstance("terminals cannot be connected".into()));
    }
    let nb = g.neighbors();
    let mut terminal = vec![false; g.len()];
    for &t in &g.terminals {
        terminal[t] = true;
    }
    let mut search = Search { nb: &nb, terminal, explored: 0 };
    for k in 0..=all.len() {
        let mut chosen = Vec::new();
        let mut banned = vec![false; g.len()];
        if search.dfs(&mut chosen, &mut banned, k) {
            chosen.sort_unstable();
            debug_assert!(connects(g, &chosen));
            return Ok(SteinerSolution { k: chosen.len(), set: chosen, explored: search.explored });
        }
    }
    unreachable!("the full candidate set connects the terminals")
}

/// Like [`steiner_exact`] but returns `None` when no set connects the terminals.
pub fn steiner_optional(g: &CircleGraphInstance) -> Option<SteinerSolution> {
    steiner_exact(g).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn already_connected() {
        let g = CircleGraphInstance::from_integers(&[("a", 1, 4), ("b", 2, 6)], &["a", "b"]).unwrap();
        let s = steiner_exact(&g).unwrap();
        assert_eq!((s.k, s.set), (0, vec![]));
    }

    #[test]
    fn star_center() {
        let g = CircleGraphInstance::from_integers(
            &[("c", 2, 20), ("x", 1, 3), ("y", 5, 6), ("z", 19, 21)],
            &["x", "z"],
        )
        .unwrap();
        let s = steiner_exact(&g).unwrap();
        assert_eq!(s.k, 1);
        assert_eq!(g.names[s.set[0]], "c");
    }

    #[test]
    fn infeasible() {
        let g = CircleGraphInstance::from_integers(&[("a", 1, 2), ("b", 3, 4)], &["a", "b"]).unwrap();
        assert!(steiner_exact(&g).is_err());
        assert!(steiner_optional(&g).is_none());
    }
}

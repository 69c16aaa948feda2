//! Decision and sorting when every repeat occurs at most twice.
//!
//! Each repeat becomes an interval between its two occurrences. Black
//! vertices are repeats whose occurrences have opposite signs (reversible
//! now); weight 1 marks odd repeats, which need an odd number of reversals.

use std::fmt::Write as _;

use crate::bijection::match_slots;
use crate::chromosome::{Chromosome, ReversalTrace, Symbol};
use crate::code::{encode_pair, Coded};
use crate::decision::{multiset_check, require_related, Decision, NoReason};
use crate::error::{Error, Result};
use crate::simplify::{is_simple, lift_trace, simplify_pair};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color {
    Black,
    White,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dp2Vertex {
    pub repeat: Symbol,
    pub color: Color,
    /// 1 for odd repeats, 2 for even ones; 0 once retired by sorting.
    pub weight: u8,
    /// Occurrence positions in π at construction time.
    pub interval: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionGraphDp2 {
    pub vertices: Vec<Dp2Vertex>,
    adj: Vec<Vec<bool>>,
}

impl IntersectionGraphDp2 {
    pub fn len(&self) -> usize {
        self.vertices.iter().filter(|v| v.weight > 0).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.vertices[v].weight > 0
    }

    pub fn index_of(&self, repeat: &str) -> Option<usize> {
        self.vertices.iter().position(|v| &*v.repeat == repeat)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&u| self.adj[v][u]).collect()
    }

    /// Edges between live vertices, as index pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] || !self.is_alive(s) {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut k = 0;
            while k < comp.len() {
                let u = comp[k];
                k += 1;
                for v in 0..n {
                    if self.adj[u][v] && !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// White weight-1 vertices whose component has no black vertex.
    pub fn stranded(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for comp in self.components() {
            if comp.iter().all(|&v| self.vertices[v].color == Color::White) {
                out.extend(comp.iter().copied().filter(|&v| self.vertices[v].weight == 1));
            }
        }
        out.sort_unstable();
        out
    }

    /// Total size of components that still need work but have no black vertex.
    fn stranded_mass(&self) -> usize {
        self.components()
            .iter()
            .filter(|c| {
                c.iter().all(|&v| self.vertices[v].color == Color::White)
                    && c.iter().any(|&v| self.vertices[v].weight == 1)
            })
            .map(Vec::len)
            .sum()
    }

    /// Updates the graph for a reversal on black vertex `x`: neighbours
    /// change colour, edges among neighbours are complemented, and the
    /// weight of `x` drops by one (the vertex is removed at zero).
    pub fn reverse_vertex(&mut self, x: usize) {
        debug_assert_eq!(self.vertices[x].color, Color::Black);
        let nb = self.neighbors(x);
        for &u in &nb {
            let c = &mut self.vertices[u].color;
            *c = if *c == Color::Black { Color::White } else { Color::Black };
        }
        for (k, &u) in nb.iter().enumerate() {
            for &v in &nb[k + 1..] {
                self.adj[u][v] = !self.adj[u][v];
                self.adj[v][u] = !self.adj[v][u];
            }
        }
        self.vertices[x].weight -= 1;
        if self.vertices[x].weight == 0 {
            for u in 0..self.vertices.len() {
                self.adj[x][u] = false;
                self.adj[u][x] = false;
            }
        }
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph ig {\n");
        for v in self.vertices.iter().filter(|v| v.weight > 0) {
            let color = if v.color == Color::Black { "black" } else { "white" };
            let _ = writeln!(
                s,
                "  \"{}\" [color={color}, weight={}, interval=\"{}-{}\"];",
                v.repeat, v.weight, v.interval.0, v.interval.1
            );
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  \"{}\" -- \"{}\";", self.vertices[u].repeat, self.vertices[v].repeat);
        }
        s.push_str("}\n");
        s
    }
}

fn check_dp2(pi: &Chromosome, tau: &Chromosome) -> Result<()> {
    require_related(pi, tau)?;
    let dp = pi.dp();
    if dp > 2 {
        return Err(Error::DpTooLarge { found: dp, max: 2 });
    }
    Ok(())
}

fn check_graph_input(pi: &Chromosome, tau: &Chromosome) -> Result<()> {
    check_dp2(pi, tau)?;
    if multiset_check(pi, tau).is_some() {
        return Err(Error::MultisetMismatch);
    }
    if !is_simple(pi) {
        return Err(Error::NotSimple);
    }
    Ok(())
}

/// Even iff the two adjacencies flanking occurrence `i` of π are matched to
/// the two adjacencies flanking a single occurrence of the same symbol in τ.
fn parity_at(p: &Coded, t: &Coded, f: &[usize], i: usize) -> Parity {
    let (a, b) = (f[i - 1], f[i]);
    let shared = if a + 1 == b {
        Some(b)
    } else if b + 1 == a {
        Some(a)
    } else {
        None
    };
    match shared {
        Some(k) if t.sym[k] == p.sym[i] => Parity::Even,
        _ => Parity::Odd,
    }
}

pub fn classify_parity(pi: &Chromosome, tau: &Chromosome, repeat: &str) -> Result<Parity> {
    check_graph_input(pi, tau)?;
    let pos = pi.positions_of(repeat);
    if pos.len() != 2 || pos[0] == 0 {
        return Err(Error::NotARepeat(repeat.to_string()));
    }
    let (_, p, t) = encode_pair(pi, tau);
    let f = match_slots(&p, &t).ok_or(Error::MultisetMismatch)?;
    Ok(parity_at(&p, &t, &f, pos[0]))
}

/// Whether the sentinel is odd, i.e. the first adjacency of π is matched to
/// the last adjacency of τ and a whole-chromosome flip is required.
pub(crate) fn sentinel_odd(pi: &Chromosome, tau: &Chromosome) -> Result<bool> {
    let (_, p, t) = encode_pair(pi, tau);
    let f = match_slots(&p, &t).ok_or(Error::MultisetMismatch)?;
    Ok(f[0] != 0)
}

pub fn build_ig_dp2(pi: &Chromosome, tau: &Chromosome) -> Result<IntersectionGraphDp2> {
    check_graph_input(pi, tau)?;
    let (it, p, t) = encode_pair(pi, tau);
    let f = match_slots(&p, &t).ok_or(Error::MultisetMismatch)?;
    let mut occ: Vec<Vec<usize>> = vec![Vec::new(); it.len()];
    for i in 1..=p.n() {
        occ[p.sym[i] as usize].push(i);
    }
    let mut vertices = Vec::new();
    for i in 1..=p.n() {
        let o = &occ[p.sym[i] as usize];
        if o.len() != 2 || o[0] != i {
            continue;
        }
        let j = o[1];
        vertices.push(Dp2Vertex {
            repeat: it.names[p.sym[i] as usize].clone(),
            color: if p.plus[i] != p.plus[j] { Color::Black } else { Color::White },
            weight: match parity_at(&p, &t, &f, i) {
                Parity::Even => 2,
                Parity::Odd => 1,
            },
            interval: (i, j),
        });
    }
    let m = vertices.len();
    let mut adj = vec![vec![false; m]; m];
    for u in 0..m {
        for v in u + 1..m {
            let (i, j) = vertices[u].interval;
            let (k, l) = vertices[v].interval;
            if (i < k && k < j && j < l) || (k < i && i < l && l < j) {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
    }
    let g = IntersectionGraphDp2 { vertices, adj };
    debug_assert!(
        g.components().iter().all(|c| {
            c.len() > 1 || g.vertices[c[0]].color == Color::Black || g.vertices[c[0]].weight == 2
        }),
        "isolated white odd vertex"
    );
    Ok(g)
}

pub fn decide_dp2(pi: &Chromosome, tau: &Chromosome) -> Result<Decision> {
    check_dp2(pi, tau)?;
    if let Some(reason) = multiset_check(pi, tau) {
        return Ok(Decision::No(reason));
    }
    let s = simplify_pair(pi, tau)?;
    let g = build_ig_dp2(&s.pi, &s.tau)?;
    Ok(match g.stranded().first() {
        Some(&v) => Decision::No(NoReason::Stranded { repeat: g.vertices[v].repeat.clone() }),
        None => Decision::Yes,
    })
}

pub fn sort_dp2(pi: &Chromosome, tau: &Chromosome) -> Result<ReversalTrace> {
    if !decide_dp2(pi, tau)?.is_yes() {
        return Err(Error::NoInstance);
    }
    let s = simplify_pair(pi, tau)?;
    let mut p = s.pi.clone();
    let mut steps = Vec::new();
    if sentinel_odd(&p, &s.tau)? {
        steps.push((0, p.len() + 1));
        p = p.flipped();
    }
    let mut g = build_ig_dp2(&p, &s.tau)?;
    let budget = 2 * g.vertices.len();
    loop {
        let mut best: Option<((usize, u8, usize), usize)> = None;
        for comp in g.components() {
            if !comp.iter().any(|&v| g.vertices[v].weight == 1) {
                continue;
            }
            for &v in &comp {
                if g.vertices[v].color != Color::Black {
                    continue;
                }
                let mut h = g.clone();
                h.reverse_vertex(v);
                let first = p.positions_of(&g.vertices[v].repeat)[0];
                let key = (h.stranded_mass(), u8::from(g.vertices[v].weight == 2), first);
                if best.as_ref().is_none_or(|(k, _)| key < *k) {
                    best = Some((key, v));
                }
            }
        }
        let Some(((delta, _, _), v)) = best else {
            if g.vertices.iter().any(|v| v.weight == 1) {
                return Err(Error::ProgressFailure("no black vertex next to an odd one".into()));
            }
            break;
        };
        if delta > 0 {
            return Err(Error::ProgressFailure(format!("every reversal strands {delta} vertices")));
        }
        let pos = p.positions_of(&g.vertices[v].repeat);
        p.reverse_in_place(pos[0], pos[1])?;
        steps.push((pos[0], pos[1]));
        g.reverse_vertex(v);
        if steps.len() > budget + 1 {
            return Err(Error::ProgressFailure(format!("more than {budget} reversals")));
        }
    }
    if p != s.tau {
        return Err(Error::ProgressFailure("final chromosome differs from target".into()));
    }
    lift_trace(&ReversalTrace::new(steps), &s.log, pi)
}

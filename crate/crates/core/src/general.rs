//! Decision and sorting for arbitrary duplication numbers.
//!
//! A bijection between identical adjacencies pairs every node of π with a
//! node of τ. Red edges join the two nodes of a π occurrence, blue edges the
//! two nodes of a τ occurrence; together they decompose into alternating
//! cycles, and π equals τ exactly when every cycle has length one.
//!
//! Node positions: occurrence `i` owns `2i` (left node) and `2i + 1` (right
//! node). Green edges `(2s + 1, 2s + 2)` are the adjacency slots.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::bijection::{match_slots, node_map, valid_coded, AdjacencyBijection};
use crate::chromosome::{Chromosome, ReversalTrace, Symbol};
use crate::code::{encode_pair, Coded, Interner};
use crate::decision::{multiset_check, require_related, Decision, NoReason};
use crate::dp2::{self, Color};
use crate::error::{Error, Result};

/// π together with its node-level alignment onto τ. Reversals carry the
/// alignment along (the induced bijection).
#[derive(Clone, Debug)]
pub(crate) struct Alignment {
    pub p: Coded,
    pub t: Coded,
    pub phi: Vec<usize>,
}

impl Alignment {
    pub fn new(p: Coded, t: Coded, mapping: &[usize]) -> Self {
        let phi = node_map(&p, &t, mapping);
        Alignment { p, t, phi }
    }

    /// The outer nodes `l(x_i)` and `r(x_j)` keep their adjacency slots;
    /// every node in between moves to the mirrored position.
    pub fn reverse(&mut self, i: usize, j: usize) {
        self.p.reverse(i, j);
        self.phi[2 * i + 1..=2 * j].reverse();
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlueEdge {
    /// Smaller node position.
    pub a: usize,
    /// Larger node position.
    pub b: usize,
    pub opposite: bool,
    pub cycle: usize,
    pub tau_occurrence: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub symbol: Symbol,
    /// π occurrences on the cycle, ascending.
    pub occurrences: Vec<usize>,
    pub blue_edges: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.occurrences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.occurrences.is_empty()
    }

    pub fn is_long(&self) -> bool {
        self.len() >= 2
    }
}

#[derive(Clone, Debug)]
pub struct AcgGraph {
    pub blue_partner: Vec<usize>,
    pub blue_edges: Vec<BlueEdge>,
    pub cycles: Vec<Cycle>,
    pub cycle_of_occurrence: Vec<usize>,
    edge_at: Vec<usize>,
    p: Coded,
    names: Vec<Symbol>,
}

impl AcgGraph {
    pub(crate) fn from_alignment(al: &Alignment, it: &Interner) -> AcgGraph {
        let occs = al.p.sym.len();
        let m = 2 * occs;
        let mut psi = vec![0; m];
        for (x, &y) in al.phi.iter().enumerate() {
            psi[y] = x;
        }
        let mut blue_partner = vec![0; m];
        let mut edge_at = vec![0; m];
        let mut blue_edges = Vec::with_capacity(occs);
        for k in 0..occs {
            let (x, y) = (psi[2 * k], psi[2 * k + 1]);
            blue_partner[x] = y;
            blue_partner[y] = x;
            edge_at[x] = blue_edges.len();
            edge_at[y] = blue_edges.len();
            blue_edges.push(BlueEdge {
                a: x.min(y),
                b: x.max(y),
                opposite: x % 2 == y % 2,
                cycle: 0,
                tau_occurrence: k,
            });
        }
        let mut cycle_of_occurrence = vec![usize::MAX; occs];
        let mut cycles = Vec::new();
        for start in 0..occs {
            if cycle_of_occurrence[start] != usize::MAX {
                continue;
            }
            let id = cycles.len();
            let mut occurrences = Vec::new();
            let mut edges = Vec::new();
            let mut cur = 2 * start;
            loop {
                let o = cur / 2;
                cycle_of_occurrence[o] = id;
                occurrences.push(o);
                let other = cur ^ 1;
                let e = edge_at[other];
                blue_edges[e].cycle = id;
                edges.push(e);
                cur = blue_partner[other];
                if cur == 2 * start {
                    break;
                }
            }
            occurrences.sort_unstable();
            cycles.push(Cycle {
                symbol: it.names[al.p.sym[start] as usize].clone(),
                occurrences,
                blue_edges: edges,
            });
        }
        AcgGraph {
            blue_partner,
            blue_edges,
            cycles,
            cycle_of_occurrence,
            edge_at,
            p: al.p.clone(),
            names: it.names.clone(),
        }
    }

    pub fn occurrence_count(&self) -> usize {
        self.p.sym.len()
    }

    pub fn symbol_of(&self, occurrence: usize) -> &Symbol {
        &self.names[self.p.sym[occurrence] as usize]
    }

    pub fn is_plus(&self, occurrence: usize) -> bool {
        self.p.plus[occurrence]
    }

    pub fn blue_edge_at(&self, node: usize) -> usize {
        self.edge_at[node]
    }

    pub fn all_trivial(&self) -> bool {
        self.cycles.iter().all(|c| !c.is_long())
    }

    pub fn trivial_count(&self) -> usize {
        self.cycles.iter().filter(|c| !c.is_long()).count()
    }

    /// Cycle lengths in ascending order.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.cycles.iter().map(Cycle::len).collect();
        v.sort_unstable();
        v
    }

    /// Checks the structural properties every alternative-cycle graph has:
    /// blue edges form a perfect matching, every cycle belongs to a single
    /// symbol, opposite blue edges join occurrences of opposite sign, and
    /// blue plus green edges form one path from the first to the last node.
    pub fn verify(&self) -> std::result::Result<(), String> {
        let m = self.blue_partner.len();
        for x in 0..m {
            let y = self.blue_partner[x];
            if y == x || self.blue_partner[y] != x {
                return Err(format!("node {x} has no proper blue partner"));
            }
        }
        for (id, c) in self.cycles.iter().enumerate() {
            let s = self.p.sym[c.occurrences[0]];
            if c.occurrences.iter().any(|&o| self.p.sym[o] != s) {
                return Err(format!("cycle {id} mixes symbols"));
            }
            if c.blue_edges.len() != c.occurrences.len() {
                return Err(format!("cycle {id} does not alternate"));
            }
        }
        for e in &self.blue_edges {
            if e.opposite && self.p.plus[e.a / 2] == self.p.plus[e.b / 2] {
                return Err(format!("opposite blue edge {}-{} joins equal signs", e.a, e.b));
            }
            let (la, lb) = (self.p.node_label(e.a), self.p.node_label(e.b));
            if la ^ 1 != lb {
                return Err(format!("blue edge {}-{} does not join head and tail", e.a, e.b));
            }
        }
        let mut visited = 0;
        let mut cur = 0;
        loop {
            let next = self.blue_partner[cur];
            visited += 2;
            if next == m - 1 {
                break;
            }
            if next == 0 || visited >= m {
                return Err("blue and green edges do not form a single path".into());
            }
            cur = if next % 2 == 1 { next + 1 } else { next - 1 };
        }
        if visited != m {
            return Err(format!("blue-green path covers {visited} of {m} nodes"));
        }
        Ok(())
    }

    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (id, c) in self.cycles.iter().enumerate() {
            let _ = write!(s, "cycle {id}: symbol={} length={} occurrences=", c.symbol, c.len());
            let occ: Vec<String> = c.occurrences.iter().map(|o| o.to_string()).collect();
            let _ = writeln!(s, "{}", occ.join(","));
            for &e in &c.blue_edges {
                let be = &self.blue_edges[e];
                let tag = if be.opposite { "opposite" } else { "non-opposite" };
                let _ = writeln!(s, "  blue {} {} {tag}", node_name(be.a), node_name(be.b));
            }
        }
        s
    }
}

fn node_name(p: usize) -> String {
    format!("{}({})", if p.is_multiple_of(2) { "l" } else { "r" }, p / 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IgVertexKind {
    Original {
        blue_edge: usize,
    },
    /// Joins two cycles of `symbol` at representative occurrences `left < right`.
    Additional {
        symbol: Symbol,
        left: usize,
        right: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IgVertex {
    pub lo: u64,
    pub hi: u64,
    pub color: Color,
    pub kind: IgVertexKind,
    pub symbol: Symbol,
}

impl IgVertex {
    /// The occurrences a reversal on this vertex acts on.
    pub fn reversal(&self, acg: &AcgGraph) -> (usize, usize) {
        match self.kind {
            IgVertexKind::Original { blue_edge } => {
                let e = &acg.blue_edges[blue_edge];
                (e.a / 2, e.b / 2)
            }
            IgVertexKind::Additional { left, right, .. } => (left, right),
        }
    }
}

/// Intersection graph with implicit edges: two vertices are adjacent iff
/// their intervals overlap without nesting.
#[derive(Clone, Debug)]
pub struct IgGeneral {
    pub vertices: Vec<IgVertex>,
    /// Vertices that must end up in a component with a black vertex.
    pub marked: Vec<bool>,
}

/// Scaled coordinate of a node: left nodes at `8i`, right nodes at `8i + 4`.
/// Additional vertices use `8i + 3` (just before a right node) and `8j + 1`
/// (just after a left node).
fn coord(node: usize) -> u64 {
    (8 * (node / 2) + 4 * (node % 2)) as u64
}

pub fn build_ig_general(acg: &AcgGraph) -> IgGeneral {
    let mut vertices = Vec::with_capacity(acg.blue_edges.len() * 2);
    let mut marked = Vec::with_capacity(acg.blue_edges.len() * 2);
    for (idx, e) in acg.blue_edges.iter().enumerate() {
        let long = acg.cycles[e.cycle].is_long();
        vertices.push(IgVertex {
            lo: coord(e.a),
            hi: coord(e.b),
            color: if e.opposite { Color::Black } else { Color::White },
            kind: IgVertexKind::Original { blue_edge: idx },
            symbol: acg.symbol_of(e.a / 2).clone(),
        });
        marked.push(long && !e.opposite);
    }
    let mut reps: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for c in &acg.cycles {
        reps.entry(acg.p.sym[c.occurrences[0]]).or_default().push(c.occurrences[0]);
    }
    for (sym, mut r) in reps {
        r.sort_unstable();
        for w in r.windows(2) {
            let (a, b) = (w[0], w[1]);
            vertices.push(IgVertex {
                lo: (8 * a + 3) as u64,
                hi: (8 * b + 1) as u64,
                color: if acg.p.plus[a] != acg.p.plus[b] { Color::Black } else { Color::White },
                kind: IgVertexKind::Additional { symbol: acg.names[sym as usize].clone(), left: a, right: b },
                symbol: acg.names[sym as usize].clone(),
            });
            marked.push(false);
        }
    }
    IgGeneral { vertices, marked }
}

impl IgGeneral {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn overlaps(&self, u: usize, v: usize) -> bool {
        let (a, b) = (&self.vertices[u], &self.vertices[v]);
        (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) || (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi)
    }

    pub fn edge_count(&self) -> usize {
        let n = self.len();
        (0..n).map(|u| (u + 1..n).filter(|&v| self.overlaps(u, v)).count()).sum()
    }

    /// Breadth-first search seeded with every black vertex.
    pub fn black_reach(&self) -> Vec<bool> {
        let n = self.len();
        let mut reached = vec![false; n];
        let mut queue = Vec::new();
        let mut rest = Vec::new();
        for v in 0..n {
            if self.vertices[v].color == Color::Black {
                reached[v] = true;
                queue.push(v);
            } else {
                rest.push(v);
            }
        }
        while let Some(u) = queue.pop() {
            let mut k = 0;
            while k < rest.len() {
                let v = rest[k];
                if self.overlaps(u, v) {
                    reached[v] = true;
                    queue.push(v);
                    rest.swap_remove(k);
                } else {
                    k += 1;
                }
            }
        }
        reached
    }

    /// Marked vertices not reachable from any black vertex.
    pub fn stranded(&self) -> Vec<usize> {
        let reached = self.black_reach();
        (0..self.len()).filter(|&v| self.marked[v] && !reached[v]).collect()
    }

    /// Component id per vertex, restricted to vertices with `keep[v]`.
    fn components_of(&self, keep: &[bool]) -> Vec<usize> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut rest: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
        let mut next = 0;
        while let Some(s) = rest.pop() {
            comp[s] = next;
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                let mut k = 0;
                while k < rest.len() {
                    let v = rest[k];
                    if self.overlaps(u, v) {
                        comp[v] = next;
                        queue.push(v);
                        rest.swap_remove(k);
                    } else {
                        k += 1;
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn components(&self) -> Vec<usize> {
        self.components_of(&vec![true; self.len()])
    }

    /// Components of the blue-edge graph (original vertices only).
    pub fn blue_components(&self) -> Vec<usize> {
        let keep: Vec<bool> =
            self.vertices.iter().map(|v| matches!(v.kind, IgVertexKind::Original { .. })).collect();
        self.components_of(&keep)
    }

    /// Checks the structure of blue-edge components: the edges of one long
    /// cycle share a component, a non-opposite 2-cycle never forms a
    /// component on its own, and every component spans from a left node to a
    /// right node.
    pub fn verify(&self, acg: &AcgGraph) -> std::result::Result<(), String> {
        let comp = self.blue_components();
        let ncomp = comp.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |m| m + 1);
        for (id, c) in acg.cycles.iter().enumerate() {
            let first = comp[c.blue_edges[0]];
            if c.blue_edges.iter().any(|&e| comp[e] != first) {
                return Err(format!("cycle {id} spreads over several components"));
            }
        }
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
        for (e, &k) in comp.iter().enumerate().take(acg.blue_edges.len()) {
            members[k].push(e);
        }
        for (k, m) in members.iter().enumerate() {
            if m.len() == 2 {
                let (e0, e1) = (&acg.blue_edges[m[0]], &acg.blue_edges[m[1]]);
                if e0.cycle == e1.cycle && acg.cycles[e0.cycle].len() == 2 && !e0.opposite && !e1.opposite {
                    return Err(format!("component {k} is a lone non-opposite 2-cycle"));
                }
            }
            let lo = m.iter().map(|&e| acg.blue_edges[e].a).min().unwrap();
            let hi = m.iter().map(|&e| acg.blue_edges[e].b).max().unwrap();
            if lo % 2 != 0 || hi % 2 != 1 || lo / 2 > hi / 2 {
                return Err(format!("component {k} spans {} to {}", node_name(lo), node_name(hi)));
            }
            let long = m.iter().any(|&e| acg.cycles[acg.blue_edges[e].cycle].is_long());
            if long && lo / 2 >= hi / 2 {
                return Err(format!("component {k} spans a single occurrence"));
            }
        }
        Ok(())
    }

    /// Partition of symbols induced by the components (symbols sharing a
    /// component are grouped); classes and members sorted.
    pub fn symbol_partition(&self) -> Vec<Vec<Symbol>> {
        let comp = self.components();
        let mut syms: Vec<Symbol> = self.vertices.iter().map(|v| v.symbol.clone()).collect();
        syms.sort();
        syms.dedup();
        let index = |s: &Symbol| syms.binary_search(s).unwrap();
        let mut parent: Vec<usize> = (0..syms.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nxt = p[y];
                p[y] = r;
                y = nxt;
            }
            r
        }
        let mut first_of_comp: BTreeMap<usize, usize> = BTreeMap::new();
        for (v, vert) in self.vertices.iter().enumerate() {
            let s = index(&vert.symbol);
            match first_of_comp.get(&comp[v]) {
                Some(&t) => {
                    let (a, b) = (find(&mut parent, s), find(&mut parent, t));
                    parent[a] = b;
                }
                None => {
                    first_of_comp.insert(comp[v], s);
                }
            }
        }
        let mut classes: BTreeMap<usize, Vec<Symbol>> = BTreeMap::new();
        for (i, s) in syms.iter().enumerate() {
            let r = find(&mut parent, i);
            classes.entry(r).or_default().push(s.clone());
        }
        let mut out: Vec<Vec<Symbol>> = classes.into_values().collect();
        out.sort();
        out
    }
}

/// Alternative-cycle graph of `pi` against `tau` under bijection `f`.
pub fn build_acg(pi: &Chromosome, tau: &Chromosome, f: &AdjacencyBijection) -> Result<AcgGraph> {
    let (it, p, t) = encode_pair(pi, tau);
    if !valid_coded(&p, &t, &f.mapping) {
        return Err(Error::MultisetMismatch);
    }
    Ok(AcgGraph::from_alignment(&Alignment::new(p, t, &f.mapping), &it))
}

/// π aligned onto τ under a bijection. Reversals applied through
/// [`AlignedPair::reverse`] keep the induced bijection, so the rebuilt cycle
/// graph reflects the surgery on the original cycles.
#[derive(Clone, Debug)]
pub struct AlignedPair {
    al: Alignment,
    it: Interner,
}

impl AlignedPair {
    pub fn new(pi: &Chromosome, tau: &Chromosome, f: &AdjacencyBijection) -> Result<Self> {
        let (it, p, t) = encode_pair(pi, tau);
        if !valid_coded(&p, &t, &f.mapping) {
            return Err(Error::MultisetMismatch);
        }
        Ok(AlignedPair { al: Alignment::new(p, t, &f.mapping), it })
    }

    /// Reverses occurrences `i..=j` of π (trace indices).
    pub fn reverse(&mut self, i: usize, j: usize) -> Result<()> {
        self.pi().check_reversal(i, j)?;
        self.al.reverse(i, j);
        Ok(())
    }

    pub fn acg(&self) -> AcgGraph {
        AcgGraph::from_alignment(&self.al, &self.it)
    }

    pub fn pi(&self) -> Chromosome {
        self.al.p.decode(&self.it)
    }

    pub fn is_sorted(&self) -> bool {
        self.al.p == self.al.t
    }
}

fn decide_aligned(acg: &AcgGraph, ig: &IgGeneral) -> Decision {
    match ig.stranded().first() {
        Some(&v) => {
            let IgVertexKind::Original { blue_edge } = ig.vertices[v].kind else {
                unreachable!("only original vertices are marked")
            };
            let occ = acg.blue_edges[blue_edge].a / 2;
            Decision::No(NoReason::Stranded { repeat: acg.symbol_of(occ).clone() })
        }
        None => Decision::Yes,
    }
}

/// Symbol ids whose IG class contains only repeats of a single sign in π.
/// Such a class never gets a black vertex, so its occurrences must already
/// sit on 1-cycles.
fn rigid_symbols(acg: &AcgGraph, ig: &IgGeneral, p: &Coded) -> Vec<bool> {
    let syms = acg.names.len();
    let mut seen = vec![[false; 2]; syms];
    for (&s, &plus) in p.sym.iter().zip(&p.plus) {
        seen[s as usize][usize::from(plus)] = true;
    }
    let comp = ig.components();
    let mut comp_mixed: BTreeMap<usize, bool> = BTreeMap::new();
    let mut comp_of_sym = vec![usize::MAX; syms];
    for (v, vert) in ig.vertices.iter().enumerate() {
        let occ = match vert.kind {
            IgVertexKind::Original { blue_edge } => acg.blue_edges[blue_edge].a / 2,
            IgVertexKind::Additional { left, .. } => left,
        };
        let s = p.sym[occ] as usize;
        comp_of_sym[s] = comp[v];
        let mixed = seen[s][0] && seen[s][1];
        *comp_mixed.entry(comp[v]).or_insert(false) |= mixed;
    }
    (0..syms).map(|s| comp_of_sym[s] != usize::MAX && !comp_mixed[&comp_of_sym[s]]).collect()
}

type BlockKey = (u32, Vec<u32>, u32);

/// Maximal runs of rigid occurrences `a..=b`, keyed by their tokens and the
/// two outer end labels, canonical up to reversal. The flag tells whether
/// the canonical form is the reversed one.
fn rigid_blocks(c: &Coded, rigid: &[bool]) -> Vec<(BlockKey, bool, usize, usize)> {
    let n = c.n();
    let mut out = Vec::new();
    let mut i = 1;
    while i <= n {
        if !rigid[c.sym[i] as usize] {
            i += 1;
            continue;
        }
        let a = i;
        while i < n && rigid[c.sym[i + 1] as usize] {
            i += 1;
        }
        let b = i;
        i += 1;
        let fwd: BlockKey =
            (c.right(a - 1), (a..=b).map(|k| c.sym[k] * 2 + u32::from(c.plus[k])).collect(), c.left(b + 1));
        let rev: BlockKey = (
            c.left(b + 1),
            (a..=b).rev().map(|k| c.sym[k] * 2 + u32::from(!c.plus[k])).collect(),
            c.right(a - 1),
        );
        if rev < fwd {
            out.push((rev, true, a, b));
        } else {
            out.push((fwd, false, a, b));
        }
    }
    out
}

/// Re-matches the slots around rigid occurrences so that each rigid block
/// of π maps onto an identical block of τ (its occurrences become
/// 1-cycles); other slots keep their partner under `mapping` when it is
/// still free. `None` if the rigid blocks of π and τ differ.
fn repair_mapping(p: &Coded, t: &Coded, mapping: &[usize], rigid: &[bool]) -> Option<Vec<usize>> {
    let mut pool: BTreeMap<BlockKey, Vec<(bool, usize, usize)>> = BTreeMap::new();
    for (key, flag, c, d) in rigid_blocks(t, rigid).into_iter().rev() {
        pool.entry(key).or_default().push((flag, c, d));
    }
    let slots = mapping.len();
    let mut out = vec![usize::MAX; slots];
    let mut used = vec![false; slots];
    for (key, flag, a, b) in rigid_blocks(p, rigid) {
        let (tflag, c, d) = pool.get_mut(&key)?.pop()?;
        for k in 0..=b - a + 1 {
            let j = if flag == tflag { c - 1 + k } else { d - k };
            out[a - 1 + k] = j;
            used[j] = true;
        }
    }
    if pool.values().any(|v| !v.is_empty()) {
        return None;
    }
    let mut free: std::collections::HashMap<u64, Vec<usize>> = std::collections::HashMap::new();
    for j in (0..slots).rev() {
        if !used[j] {
            free.entry(t.adj_key(j)).or_default().push(j);
        }
    }
    let mut rest = Vec::new();
    for s in 0..slots {
        if out[s] == usize::MAX {
            let j = mapping[s];
            if !used[j] {
                out[s] = j;
                used[j] = true;
            } else {
                rest.push(s);
            }
        }
    }
    for s in rest {
        let list = free.get_mut(&p.adj_key(s))?;
        while let Some(j) = list.pop() {
            if !used[j] {
                out[s] = j;
                used[j] = true;
                break;
            }
        }
        if out[s] == usize::MAX {
            return None;
        }
    }
    Some(out)
}

/// Aligns π onto τ starting from `mapping`, repaired so that rigid classes
/// sit on 1-cycles. On failure returns a rigid repeat that cannot be
/// placed.
fn repaired_alignment(
    it: &Interner,
    p: Coded,
    t: Coded,
    mapping: &[usize],
) -> std::result::Result<Alignment, Symbol> {
    let al = Alignment::new(p, t, mapping);
    let acg = AcgGraph::from_alignment(&al, it);
    let ig = build_ig_general(&acg);
    if ig.stranded().is_empty() {
        return Ok(al);
    }
    let rigid = rigid_symbols(&acg, &ig, &al.p);
    let blame = || {
        let c = acg.cycles.iter().find(|c| c.is_long() && rigid[al.p.sym[c.occurrences[0]] as usize]);
        c.map_or_else(|| acg.names[0].clone(), |c| c.symbol.clone())
    };
    match repair_mapping(&al.p, &al.t, mapping, &rigid) {
        Some(m) => Ok(Alignment::new(al.p.clone(), al.t.clone(), &m)),
        None => Err(blame()),
    }
}

fn decide_from(pi: &Chromosome, tau: &Chromosome, mapping: Option<&[usize]>) -> Result<Decision> {
    require_related(pi, tau)?;
    if let Some(reason) = multiset_check(pi, tau) {
        return Ok(Decision::No(reason));
    }
    let (it, p, t) = encode_pair(pi, tau);
    let base = match mapping {
        Some(m) if valid_coded(&p, &t, m) => m.to_vec(),
        Some(_) => return Err(Error::MultisetMismatch),
        None => match_slots(&p, &t).ok_or(Error::MultisetMismatch)?,
    };
    match repaired_alignment(&it, p, t, &base) {
        Ok(al) => {
            let acg = AcgGraph::from_alignment(&al, &it);
            Ok(decide_aligned(&acg, &build_ig_general(&acg)))
        }
        Err(repeat) => Ok(Decision::No(NoReason::Stranded { repeat })),
    }
}

/// Decision through the cycle graph starting from bijection `f`, for any
/// duplication number. Slots around single-sign classes are re-matched
/// first, which makes the answer independent of `f`.
pub fn decide_with_bijection(pi: &Chromosome, tau: &Chromosome, f: &AdjacencyBijection) -> Result<Decision> {
    decide_from(pi, tau, Some(&f.mapping))
}

/// The black-vertex condition evaluated on `f` exactly as given, without
/// re-matching. Can answer no for a reachable target when single-sign
/// repeats share duplicated adjacencies.
pub fn decide_fixed_bijection(pi: &Chromosome, tau: &Chromosome, f: &AdjacencyBijection) -> Result<Decision> {
    require_related(pi, tau)?;
    if let Some(reason) = multiset_check(pi, tau) {
        return Ok(Decision::No(reason));
    }
    let acg = build_acg(pi, tau, f)?;
    let ig = build_ig_general(&acg);
    Ok(decide_aligned(&acg, &ig))
}

pub fn decide_general(pi: &Chromosome, tau: &Chromosome) -> Result<Decision> {
    require_related(pi, tau)?;
    if let Some(reason) = multiset_check(pi, tau) {
        return Ok(Decision::No(reason));
    }
    if pi.dp() <= 2 {
        return dp2::decide_dp2(pi, tau);
    }
    decide_from(pi, tau, None)
}

fn fresh_alignment(it: &Interner, p: &Coded, t: &Coded) -> Option<Alignment> {
    let m = match_slots(p, t)?;
    repaired_alignment(it, p.clone(), t.clone(), &m).ok()
}

fn solvable_aligned(it: &Interner, al: &Alignment) -> bool {
    let acg = AcgGraph::from_alignment(al, it);
    build_ig_general(&acg).stranded().is_empty()
}

/// Symmetric reversals of `al.p`, most promising first: those closing a
/// 1-cycle, then black additional vertices, then the rest.
fn ranked_moves(it: &Interner, al: &Alignment) -> Vec<(usize, usize)> {
    let acg = AcgGraph::from_alignment(al, it);
    let p = &al.p;
    let last = p.sym.len() - 1;
    let mut splits = Vec::new();
    for e in &acg.blue_edges {
        let (i, j) = (e.a / 2, e.b / 2);
        if e.opposite && i != j && acg.cycles[e.cycle].is_long() {
            splits.push((i, j));
        }
    }
    splits.sort_unstable();
    splits.dedup();
    let ig = build_ig_general(&acg);
    let mut joins: Vec<(usize, usize)> = ig
        .vertices
        .iter()
        .filter(|v| v.color == Color::Black && matches!(v.kind, IgVertexKind::Additional { .. }))
        .map(|v| v.reversal(&acg))
        .collect();
    joins.sort_unstable();
    let mut out = splits.clone();
    for m in joins {
        if !out.contains(&m) {
            out.push(m);
        }
    }
    let listed: std::collections::HashSet<(usize, usize)> = out.iter().copied().collect();
    let mut rest = Vec::new();
    for i in 0..=last {
        for j in i + 1..=last {
            let sym_ok = p.sym[i] == p.sym[j] && p.plus[i] != p.plus[j];
            let inner = i > 0 && j < last;
            if sym_ok && (inner || (i == 0 && j == last)) && !listed.contains(&(i, j)) {
                rest.push((i, j));
            }
        }
    }
    rest.sort_by_key(|&(i, j)| (acg.cycle_of_occurrence[i] == acg.cycle_of_occurrence[j], i, j));
    out.extend(rest);
    out
}

/// Search frame: chromosome, its ranked moves, index of the next move.
type Frame = (Coded, Vec<(usize, usize)>, usize);

/// Default limit on states visited by [`sort_general`].
pub const SORT_STATE_LIMIT: usize = 200_000;

/// A trace from `pi` to `tau` for any duplication number. Depth-first over
/// reversals that keep the target reachable, trying cycle-closing moves
/// first and never revisiting a chromosome.
pub fn sort_general(pi: &Chromosome, tau: &Chromosome) -> Result<ReversalTrace> {
    sort_general_limited(pi, tau, SORT_STATE_LIMIT)
}

pub fn sort_general_limited(pi: &Chromosome, tau: &Chromosome, limit: usize) -> Result<ReversalTrace> {
    require_related(pi, tau)?;
    if !decide_general(pi, tau)?.is_yes() {
        return Err(Error::NoInstance);
    }
    let (it, p, t) = encode_pair(pi, tau);
    let mut visited: std::collections::HashSet<Coded> = std::collections::HashSet::new();
    visited.insert(p.clone());
    let al = fresh_alignment(&it, &p, &t).ok_or(Error::NoInstance)?;
    let moves = ranked_moves(&it, &al);
    let mut stack: Vec<Frame> = vec![(p, moves, 0)];
    let mut steps: Vec<(usize, usize)> = Vec::new();
    while let Some((cur, moves, next)) = stack.last_mut() {
        if *cur == t {
            return Ok(ReversalTrace::new(steps));
        }
        if visited.len() >= limit {
            return Err(Error::ProgressFailure(format!("no trace within {limit} visited chromosomes")));
        }
        let Some(&(i, j)) = moves.get(*next) else {
            stack.pop();
            steps.pop();
            continue;
        };
        *next += 1;
        let mut q = cur.clone();
        q.reverse(i, j);
        if visited.contains(&q) {
            continue;
        }
        visited.insert(q.clone());
        let Some(al) = fresh_alignment(&it, &q, &t) else { continue };
        if !solvable_aligned(&it, &al) {
            continue;
        }
        let moves = ranked_moves(&it, &al);
        stack.push((q, moves, 0));
        steps.push((i, j));
    }
    Err(Error::ProgressFailure("search exhausted without reaching the target".into()))
}

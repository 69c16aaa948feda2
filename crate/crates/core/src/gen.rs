//! Seeded instance generators.

use std::collections::{BTreeMap, HashMap};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::chromosome::{Chromosome, Orientation, SignedToken};
use crate::code::{Coded, Interner};
use crate::error::{Error, Result};
use crate::simplify::is_simple;

fn gene(k: usize) -> String {
    k.to_string()
}

fn repeat(k: usize) -> String {
    format!("r{k}")
}

fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Orientation {
    if rng.gen_bool(0.5) {
        Orientation::Plus
    } else {
        Orientation::Minus
    }
}

/// Genes `1..=genes` once each; repeat `r{k}` occurs `counts[k-1]` times.
/// Order and signs are uniform.
pub fn random_chromosome<R: Rng + ?Sized>(rng: &mut R, genes: usize, counts: &[usize]) -> Chromosome {
    let mut symbols: Vec<String> = (1..=genes).map(gene).collect();
    for (k, &c) in counts.iter().enumerate() {
        symbols.extend(std::iter::repeat_n(repeat(k + 1), c));
    }
    symbols.shuffle(rng);
    let interior = symbols.iter().map(|s| SignedToken::new(s, random_sign(rng))).collect();
    Chromosome::from_interior(interior).expect("generated symbols avoid the sentinel")
}

/// Every symmetric reversal `(i, j)` of `c`, plus the whole flip.
pub fn symmetric_reversals(c: &Chromosome) -> Vec<(usize, usize)> {
    let t = c.tokens();
    let n = c.len();
    let mut out = vec![(0, n + 1)];
    for i in 1..=n {
        for j in i + 1..=n {
            if t[i] == t[j].negated() {
                out.push((i, j));
            }
        }
    }
    out
}

/// A uniformly chosen symmetric reversal, the whole flip included.
pub fn random_reversal<R: Rng + ?Sized>(rng: &mut R, c: &Chromosome) -> (usize, usize) {
    *symmetric_reversals(c).choose(rng).expect("the whole flip is always available")
}

/// Like [`scramble`] but picks a repeat first, then one of its opposite
/// pairs; linear work per step, so it suits chromosomes with thousands of
/// tokens. Steps on a repeat without an opposite pair are skipped.
pub fn scramble_fast<R: Rng + ?Sized>(rng: &mut R, c: &Chromosome, steps: usize) -> Chromosome {
    let mut out = c.clone();
    let mut pos: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (k, t) in out.interior().iter().enumerate() {
        pos.entry(t.symbol.to_string()).or_default().push(k + 1);
    }
    pos.retain(|_, v| v.len() > 1);
    let keys: Vec<String> = pos.keys().cloned().collect();
    if keys.is_empty() {
        return out;
    }
    for _ in 0..steps {
        let occ = &pos[keys.choose(rng).expect("non-empty")];
        let t = out.tokens();
        let pairs: Vec<(usize, usize)> = (0..occ.len())
            .flat_map(|a| (a + 1..occ.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| t[occ[a]] == t[occ[b]].negated())
            .map(|(a, b)| (occ[a].min(occ[b]), occ[a].max(occ[b])))
            .collect();
        let Some(&(i, j)) = pairs.choose(rng) else { continue };
        out.reverse_in_place(i, j).expect("opposite copies give a symmetric reversal");
        for list in pos.values_mut() {
            for p in list.iter_mut() {
                if (i..=j).contains(p) {
                    *p = i + j - *p;
                }
            }
        }
    }
    out
}

/// Applies `steps` random symmetric reversals; the result is reachable from `c`.
pub fn scramble<R: Rng + ?Sized>(rng: &mut R, c: &Chromosome, steps: usize) -> Chromosome {
    let mut out = c.clone();
    for _ in 0..steps {
        let (i, j) = random_reversal(rng, &out);
        out.reverse_in_place(i, j).expect("generated reversal is symmetric");
    }
    out
}

/// Adjacency walk state over end-node labels. The next token is determined
/// by the left label chosen, and its right label is that label with the
/// low bit flipped.
struct TrailSearch {
    /// For each right label, the (left label, adjacency key) options.
    options: HashMap<u32, Vec<(u32, u64)>>,
    adj_left: HashMap<u64, usize>,
    sym_left: Vec<usize>,
    len: usize,
    path: Vec<u32>,
    budget: usize,
}

impl TrailSearch {
    fn new(c: &Chromosome) -> (Interner, TrailSearch) {
        let mut it = Interner::new();
        let code = Coded::encode(c, &mut it);
        let adj_left = code.multiset();
        let mut options: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
        for &k in adj_left.keys() {
            let (a, b) = ((k >> 32) as u32, k as u32);
            options.entry(a).or_default().push((b, k));
            if a != b {
                options.entry(b).or_default().push((a, k));
            }
        }
        for v in options.values_mut() {
            v.sort_unstable();
        }
        let mut sym_left = vec![0; it.len()];
        for &s in &code.sym[1..=code.n()] {
            sym_left[s as usize] += 1;
        }
        let len = code.n();
        (it, TrailSearch { options, adj_left, sym_left, len, path: Vec::new(), budget: usize::MAX })
    }

    /// Extends the walk from right label `right`; `visit` receives each
    /// completed list of left labels and returns whether to continue.
    fn run<R: Rng + ?Sized>(
        &mut self,
        right: u32,
        rng: &mut Option<&mut R>,
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> bool {
        if self.budget == 0 {
            return false;
        }
        self.budget -= 1;
        let last = self.path.len() == self.len;
        let mut opts = self.options.get(&right).cloned().unwrap_or_default();
        if let Some(r) = rng.as_deref_mut() {
            opts.shuffle(r);
        }
        for (left, key) in opts {
            let sym = (left / 2) as usize;
            if self.adj_left[&key] == 0 {
                continue;
            }
            if last {
                // Closing adjacency must reach l(-r0), the sentinel tail.
                if left != 1 {
                    continue;
                }
                *self.adj_left.get_mut(&key).unwrap() -= 1;
                let go_on = visit(&self.path);
                *self.adj_left.get_mut(&key).unwrap() += 1;
                if !go_on {
                    return false;
                }
                continue;
            }
            if sym == 0 || self.sym_left[sym] == 0 {
                continue;
            }
            *self.adj_left.get_mut(&key).unwrap() -= 1;
            self.sym_left[sym] -= 1;
            self.path.push(left);
            let go_on = self.run(left ^ 1, rng, visit);
            self.path.pop();
            self.sym_left[sym] += 1;
            *self.adj_left.get_mut(&key).unwrap() += 1;
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn from_lefts(it: &Interner, lefts: &[u32]) -> Chromosome {
    let mut code = Coded { sym: vec![0], plus: vec![true] };
    for &l in lefts {
        code.sym.push(l / 2);
        code.plus.push(l % 2 == 0);
    }
    code.sym.push(0);
    code.plus.push(false);
    code.decode(it)
}

/// A random chromosome with the same duplication numbers and adjacency
/// multiset as `c`, found by randomized backtracking. `None` if the search
/// budget runs out first.
pub fn random_trail<R: Rng + ?Sized>(rng: &mut R, c: &Chromosome, budget: usize) -> Option<Chromosome> {
    let (it, mut search) = TrailSearch::new(c);
    search.budget = budget;
    let mut found = None;
    let mut r = Some(rng);
    search.run(1, &mut r, &mut |p: &[u32]| {
        found = Some(p.to_vec());
        false
    });
    found.map(|p| from_lefts(&it, &p))
}

/// Every chromosome sharing duplication numbers and adjacency multiset with
/// `c`, in lexicographic order of end-node labels.
pub fn all_trails(c: &Chromosome) -> Vec<Chromosome> {
    let (it, mut search) = TrailSearch::new(c);
    let mut out = Vec::new();
    let mut none: Option<&mut rand::rngs::mock::StepRng> = None;
    search.run(1, &mut none, &mut |p: &[u32]| {
        out.push(from_lefts(&it, p));
        true
    });
    out
}

/// Every chromosome over genes `1..=genes` and repeats `r1..=r{repeats}`
/// each occurring twice, in every order and orientation.
pub fn enumerate_chromosomes(genes: usize, repeats: usize) -> Vec<Chromosome> {
    let mut symbols: Vec<String> = (1..=genes).map(gene).collect();
    for k in 1..=repeats {
        symbols.push(repeat(k));
        symbols.push(repeat(k));
    }
    symbols.sort();
    let mut orders = Vec::new();
    let mut used = vec![false; symbols.len()];
    let mut cur = Vec::new();
    permute(&symbols, &mut used, &mut cur, &mut orders);
    let m = symbols.len();
    let mut out = Vec::with_capacity(orders.len() << m);
    for order in &orders {
        for mask in 0u32..(1 << m) {
            let interior = order
                .iter()
                .enumerate()
                .map(|(k, s)| {
                    let o = if mask >> k & 1 == 0 { Orientation::Plus } else { Orientation::Minus };
                    SignedToken::new(s, o)
                })
                .collect();
            out.push(Chromosome::from_interior(interior).expect("generated symbols avoid the sentinel"));
        }
    }
    out
}

fn permute(symbols: &[String], used: &mut [bool], cur: &mut Vec<String>, out: &mut Vec<Vec<String>>) {
    if cur.len() == symbols.len() {
        out.push(cur.clone());
        return;
    }
    for k in 0..symbols.len() {
        if used[k] || (k > 0 && symbols[k] == symbols[k - 1] && !used[k - 1]) {
            continue;
        }
        used[k] = true;
        cur.push(symbols[k].clone());
        permute(symbols, used, cur, out);
        cur.pop();
        used[k] = false;
    }
}

/// Target with every repeat once in each orientation, simple.
pub fn random_balanced_target<R: Rng + ?Sized>(rng: &mut R, genes: usize, repeats: usize) -> Chromosome {
    loop {
        let mut symbols: Vec<String> = (1..=genes).map(gene).collect();
        for k in 1..=repeats {
            symbols.push(repeat(k));
            symbols.push(repeat(k));
        }
        symbols.shuffle(rng);
        let mut first_sign: HashMap<String, Orientation> = HashMap::new();
        let interior = symbols
            .iter()
            .map(|s| {
                let o = match first_sign.get(s) {
                    Some(o) => o.flip(),
                    None => {
                        let o = random_sign(rng);
                        first_sign.insert(s.clone(), o);
                        o
                    }
                };
                SignedToken::new(s, o)
            })
            .collect();
        let c = Chromosome::from_interior(interior).expect("generated symbols avoid the sentinel");
        if is_simple(&c) {
            return c;
        }
    }
}

/// A 2-balanced pair `(pi, tau)`: `pi` is either a random scramble of
/// `tau` or a random chromosome with the same adjacencies.
pub fn random_balanced_pair<R: Rng + ?Sized>(
    rng: &mut R,
    genes: usize,
    repeats: usize,
) -> Result<(Chromosome, Chromosome)> {
    if repeats == 0 {
        return Err(Error::InvalidInstance("a balanced pair needs at least one repeat".into()));
    }
    let tau = random_balanced_target(rng, genes, repeats);
    let pi = if rng.gen_bool(0.5) {
        let steps = rng.gen_range(0..=2 * repeats + 1);
        scramble(rng, &tau, steps)
    } else {
        random_trail(rng, &tau, 100_000).unwrap_or_else(|| tau.clone())
    };
    Ok((pi, tau))
}

/// Seeded related pair with genes and repeats of duplication number up to
/// `dp`; `solvable` scrambles π into τ, otherwise τ is a random trail of π
/// (same adjacencies, reachability unknown).
pub fn random_pair<R: Rng + ?Sized>(
    rng: &mut R,
    genes: usize,
    repeats: usize,
    dp: usize,
    solvable: bool,
) -> Result<(Chromosome, Chromosome)> {
    if repeats > 0 && dp < 2 {
        return Err(Error::InvalidInstance("repeats need a duplication number of at least 2".into()));
    }
    let counts: Vec<usize> = (0..repeats).map(|k| if k == 0 { dp } else { rng.gen_range(2..=dp) }).collect();
    let pi = random_chromosome(rng, genes, &counts);
    let tau = if solvable {
        let steps = rng.gen_range(1..=2 * (genes + repeats) + 2);
        scramble(rng, &pi, steps)
    } else {
        random_trail(rng, &pi, 100_000).unwrap_or_else(|| pi.clone())
    };
    Ok((pi, tau))
}

/// Whether `pi` and `tau` carry the same adjacency multiset.
pub fn same_adjacencies(pi: &Chromosome, tau: &Chromosome) -> bool {
    let mut it = Interner::new();
    Coded::encode(pi, &mut it).multiset() == Coded::encode(tau, &mut it).multiset()
}

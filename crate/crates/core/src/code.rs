//! Integer encoding of chromosome pairs shared by the graph algorithms.
//!
//! Symbol ids are dense with the sentinel at 0. An end-node label is
//! `2 * id` for the head and `2 * id + 1` for the tail.

use std::collections::HashMap;

use crate::chromosome::{Chromosome, Orientation, SignedToken, Symbol, SENTINEL};

#[derive(Clone, Debug, Default)]
pub(crate) struct Interner {
    pub names: Vec<Symbol>,
    ids: HashMap<Symbol, u32>,
}

impl Interner {
    pub fn new() -> Self {
        let mut it = Interner::default();
        it.intern(&Symbol::from(SENTINEL));
        it
    }

    pub fn intern(&mut self, s: &Symbol) -> u32 {
        if let Some(&id) = self.ids.get(s) {
            return id;
        }
        let id = self.names.len() as u32;
        self.names.push(s.clone());
        self.ids.insert(s.clone(), id);
        id
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Coded {
    pub sym: Vec<u32>,
    pub plus: Vec<bool>,
}

impl Coded {
    pub fn encode(c: &Chromosome, it: &mut Interner) -> Coded {
        let mut sym = Vec::with_capacity(c.tokens().len());
        let mut plus = Vec::with_capacity(c.tokens().len());
        for t in c.tokens() {
            sym.push(it.intern(&t.symbol));
            plus.push(t.is_plus());
        }
        Coded { sym, plus }
    }

    pub fn decode(&self, it: &Interner) -> Chromosome {
        let tokens = self
            .sym
            .iter()
            .zip(&self.plus)
            .map(|(&s, &p)| SignedToken {
                symbol: it.names[s as usize].clone(),
                orientation: if p { Orientation::Plus } else { Orientation::Minus },
            })
            .collect();
        Chromosome::from_tokens(tokens).expect("encoded chromosome keeps its sentinels")
    }

    /// Number of non-sentinel tokens.
    pub fn n(&self) -> usize {
        self.sym.len() - 2
    }

    pub fn left(&self, i: usize) -> u32 {
        self.sym[i] * 2 + u32::from(!self.plus[i])
    }

    pub fn right(&self, i: usize) -> u32 {
        self.sym[i] * 2 + u32::from(self.plus[i])
    }

    /// Label of node position `p`, where occurrence `i` owns `2i` (left)
    /// and `2i + 1` (right).
    pub fn node_label(&self, p: usize) -> u32 {
        if p.is_multiple_of(2) {
            self.left(p / 2)
        } else {
            self.right(p / 2)
        }
    }

    pub fn adj_key(&self, slot: usize) -> u64 {
        pair_key(self.right(slot), self.left(slot + 1))
    }

    pub fn reverse(&mut self, i: usize, j: usize) {
        self.sym[i..=j].reverse();
        self.plus[i..=j].reverse();
        for p in &mut self.plus[i..=j] {
            *p = !*p;
        }
    }

    pub fn multiset(&self) -> HashMap<u64, usize> {
        let mut m = HashMap::with_capacity(self.sym.len());
        for s in 0..=self.n() {
            *m.entry(self.adj_key(s)).or_insert(0) += 1;
        }
        m
    }
}

pub(crate) fn pair_key(a: u32, b: u32) -> u64 {
    let (x, y) = if a <= b { (a, b) } else { (b, a) };
    (u64::from(x) << 32) | u64::from(y)
}

pub(crate) fn encode_pair(pi: &Chromosome, tau: &Chromosome) -> (Interner, Coded, Coded) {
    let mut it = Interner::new();
    let p = Coded::encode(pi, &mut it);
    let t = Coded::encode(tau, &mut it);
    (it, p, t)
}

//! Signed chromosomes, end nodes, adjacencies and the symmetric reversal.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Reserved symbol used for the flanking tokens `+r0 ... -r0`.
pub const SENTINEL: &str = "r0";

pub type Symbol = Arc<str>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Plus,
    Minus,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Plus => Orientation::Minus,
            Orientation::Minus => Orientation::Plus,
        }
    }

    pub fn sign_char(self) -> char {
        match self {
            Orientation::Plus => '+',
            Orientation::Minus => '-',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedToken {
    pub symbol: Symbol,
    pub orientation: Orientation,
}

impl SignedToken {
    pub fn new(symbol: &str, orientation: Orientation) -> Self {
        SignedToken { symbol: Arc::from(symbol), orientation }
    }

    pub fn plus(symbol: &str) -> Self {
        Self::new(symbol, Orientation::Plus)
    }

    pub fn minus(symbol: &str) -> Self {
        Self::new(symbol, Orientation::Minus)
    }

    pub fn negated(&self) -> Self {
        SignedToken { symbol: self.symbol.clone(), orientation: self.orientation.flip() }
    }

    pub fn is_plus(&self) -> bool {
        self.orientation == Orientation::Plus
    }

    /// Left end node, `l(x)`.
    pub fn left(&self) -> EndNode {
        let end = if self.is_plus() { End::Head } else { End::Tail };
        EndNode { symbol: self.symbol.clone(), end }
    }

    /// Right end node, `r(x)`.
    pub fn right(&self) -> EndNode {
        let end = if self.is_plus() { End::Tail } else { End::Head };
        EndNode { symbol: self.symbol.clone(), end }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut chars = text.chars();
        let orientation = match chars.next() {
            Some('+') => Orientation::Plus,
            Some('-') => Orientation::Minus,
            _ => return Err(Error::MalformedToken(text.to_string())),
        };
        let id = chars.as_str();
        if !valid_symbol(id) {
            return Err(Error::MalformedToken(text.to_string()));
        }
        Ok(SignedToken::new(id, orientation))
    }
}

impl fmt::Display for SignedToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.orientation.sign_char(), self.symbol)
    }
}

pub fn valid_symbol(id: &str) -> bool {
    !id.is_empty() && !id.chars().any(|c| c.is_whitespace() || c == '+' || c == '-')
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Head,
    Tail,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndNode {
    pub symbol: Symbol,
    pub end: End,
}

impl fmt::Display for EndNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = match self.end {
            End::Head => 'h',
            End::Tail => 't',
        };
        write!(f, "{}^{}", self.symbol, e)
    }
}

/// Unordered pair of end nodes, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Adjacency {
    a: EndNode,
    b: EndNode,
}

impl Adjacency {
    pub fn new(x: EndNode, y: EndNode) -> Self {
        if x <= y {
            Adjacency { a: x, b: y }
        } else {
            Adjacency { a: y, b: x }
        }
    }

    pub fn nodes(&self) -> (&EndNode, &EndNode) {
        (&self.a, &self.b)
    }

    pub fn involves(&self, symbol: &str) -> bool {
        &*self.a.symbol == symbol || &*self.b.symbol == symbol
    }
}

impl fmt::Display for Adjacency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.a, self.b)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdjacencyMultiset {
    pub counts: BTreeMap<Adjacency, usize>,
}

impl AdjacencyMultiset {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn count(&self, adj: &Adjacency) -> usize {
        self.counts.get(adj).copied().unwrap_or(0)
    }

    /// Some adjacency whose multiplicity differs between the two multisets.
    pub fn first_difference(&self, other: &AdjacencyMultiset) -> Option<Adjacency> {
        self.counts.keys().chain(other.counts.keys()).find(|a| self.count(a) != other.count(a)).cloned()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chromosome {
    tokens: Vec<SignedToken>,
}

impl Chromosome {
    /// Builds a chromosome from interior tokens, adding the sentinels.
    pub fn from_interior(interior: Vec<SignedToken>) -> Result<Self> {
        if interior.iter().any(|t| &*t.symbol == SENTINEL) {
            return Err(Error::SentinelMisplaced);
        }
        let mut tokens = Vec::with_capacity(interior.len() + 2);
        tokens.push(SignedToken::plus(SENTINEL));
        tokens.extend(interior);
        tokens.push(SignedToken::minus(SENTINEL));
        Ok(Chromosome { tokens })
    }

    /// Builds a chromosome from a full token list including both sentinels.
    pub fn from_tokens(tokens: Vec<SignedToken>) -> Result<Self> {
        let n = tokens.len();
        if n < 2
            || tokens[0] != SignedToken::plus(SENTINEL)
            || tokens[n - 1] != SignedToken::minus(SENTINEL)
            || tokens[1..n - 1].iter().any(|t| &*t.symbol == SENTINEL)
        {
            return Err(Error::SentinelMisplaced);
        }
        Ok(Chromosome { tokens })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let tokens = text.split_whitespace().map(SignedToken::parse).collect::<Result<Vec<_>>>()?;
        let has_sentinel = tokens.iter().any(|t| &*t.symbol == SENTINEL);
        if has_sentinel {
            Self::from_tokens(tokens)
        } else {
            Self::from_interior(tokens)
        }
    }

    pub fn tokens(&self) -> &[SignedToken] {
        &self.tokens
    }

    /// Non-sentinel tokens.
    pub fn interior(&self) -> &[SignedToken] {
        &self.tokens[1..self.tokens.len() - 1]
    }

    /// Number of non-sentinel tokens.
    pub fn len(&self) -> usize {
        self.tokens.len() - 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn adjacency_at(&self, i: usize) -> Adjacency {
        Adjacency::new(self.tokens[i].right(), self.tokens[i + 1].left())
    }

    pub fn adjacencies(&self) -> Vec<Adjacency> {
        (0..=self.len()).map(|i| self.adjacency_at(i)).collect()
    }

    pub fn adjacency_multiset(&self) -> AdjacencyMultiset {
        let mut counts = BTreeMap::new();
        for a in self.adjacencies() {
            *counts.entry(a).or_insert(0) += 1;
        }
        AdjacencyMultiset { counts }
    }

    pub fn duplication_numbers(&self) -> BTreeMap<Symbol, usize> {
        let mut counts = BTreeMap::new();
        for t in self.interior() {
            *counts.entry(t.symbol.clone()).or_insert(0) += 1;
        }
        counts
    }

    /// Largest duplication number, 0 for the empty chromosome.
    pub fn dp(&self) -> usize {
        self.duplication_numbers().values().copied().max().unwrap_or(0)
    }

    pub fn is_related(&self, other: &Chromosome) -> bool {
        self.duplication_numbers() == other.duplication_numbers()
    }

    pub fn positions_of(&self, symbol: &str) -> Vec<usize> {
        (0..self.tokens.len()).filter(|&i| &*self.tokens[i].symbol == symbol).collect()
    }

    /// Whether `(i, j)` is a valid symmetric reversal on this chromosome.
    pub fn check_reversal(&self, i: usize, j: usize) -> Result<()> {
        let n = self.len();
        if i == 0 && j == n + 1 {
            return Ok(());
        }
        if i < 1 || i >= j || j > n {
            return Err(Error::OutOfRange { i, j, n });
        }
        if self.tokens[i] != self.tokens[j].negated() {
            return Err(Error::NotSymmetric { i, j });
        }
        Ok(())
    }

    pub fn apply_reversal(&self, i: usize, j: usize) -> Result<Chromosome> {
        let mut c = self.clone();
        c.reverse_in_place(i, j)?;
        Ok(c)
    }

    pub fn reverse_in_place(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_reversal(i, j)?;
        let seg = &mut self.tokens[i..=j];
        seg.reverse();
        for t in seg.iter_mut() {
            t.orientation = t.orientation.flip();
        }
        Ok(())
    }

    /// The reversed-and-negated chromosome.
    pub fn flipped(&self) -> Chromosome {
        self.apply_reversal(0, self.len() + 1).expect("whole flip is always valid")
    }

    pub fn replay(&self, trace: &ReversalTrace) -> Result<Chromosome> {
        let mut c = self.clone();
        for (k, &(i, j)) in trace.steps.iter().enumerate() {
            c.reverse_in_place(i, j).map_err(|e| Error::TraceStep { step: k + 1, source: Box::new(e) })?;
        }
        Ok(c)
    }

    /// Compact bracketed rendering, e.g. `[+r0,+1,-r0]`, with the sentinel
    /// written as `sentinel`.
    pub fn bracketed(&self, sentinel: &str) -> String {
        let parts: Vec<String> = self
            .tokens
            .iter()
            .map(|t| {
                let s: &str = if &*t.symbol == SENTINEL { sentinel } else { &t.symbol };
                format!("{}{}", t.orientation.sign_char(), s)
            })
            .collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for Chromosome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in &self.tokens {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Chromosome {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Chromosome::parse(s)
    }
}

/// Ordered list of symmetric reversals `(i, j)`, indexed as in
/// `[x_0, x_1, ..., x_{n+1}]` with `x_0 = +r0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReversalTrace {
    pub steps: Vec<(usize, usize)>,
}

impl ReversalTrace {
    pub fn new(steps: Vec<(usize, usize)>) -> Self {
        ReversalTrace { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Renders the trace file: `@start <chromosome>` then one `i j` per line.
    pub fn to_file_string(&self, start: &Chromosome) -> String {
        let mut out = format!("@start {start}\n");
        for (i, j) in &self.steps {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }

    /// Parses a trace file, returning the optional start chromosome.
    pub fn parse_file(text: &str) -> Result<(Option<Chromosome>, ReversalTrace)> {
        let mut start = None;
        let mut steps = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("@start") {
                start = Some(Chromosome::parse(rest)?);
                continue;
            }
            let nums: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::MalformedTrace { line: lineno + 1, text: raw.to_string() };
            if nums.len() != 2 {
                return Err(bad());
            }
            let i = nums[0].parse().map_err(|_| bad())?;
            let j = nums[1].parse().map_err(|_| bad())?;
            steps.push((i, j));
        }
        Ok((start, ReversalTrace { steps }))
    }
}

/// Reads all chromosomes from a chromosome file (one per line, `#` comments).
pub fn parse_chromosome_file(text: &str) -> Result<Vec<Chromosome>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(Chromosome::parse)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Chromosome {
        Chromosome::parse(s).unwrap()
    }

    #[test]
    fn parse_inserts_sentinels() {
        let a = c("+1 -r1 +2 +r1");
        let b = c("+r0 +1 -r1 +2 +r1 -r0");
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "+r0 +1 -r1 +2 +r1 -r0");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Chromosome::parse("+1 r2"), Err(Error::MalformedToken(_))));
        assert!(matches!(Chromosome::parse("+1 +"), Err(Error::MalformedToken(_))));
        assert!(matches!(Chromosome::parse("+1 +r0 -r0"), Err(Error::SentinelMisplaced)));
        assert!(matches!(Chromosome::parse("-r0 +1 -r0"), Err(Error::SentinelMisplaced)));
        assert!(matches!(Chromosome::parse("+r0 +1"), Err(Error::SentinelMisplaced)));
    }

    #[test]
    fn empty_chromosome_adjacency() {
        let e = c("");
        let m = e.adjacency_multiset();
        assert_eq!(m.total(), 1);
        let a = Adjacency::new(SignedToken::plus(SENTINEL).right(), SignedToken::minus(SENTINEL).left());
        assert_eq!(m.count(&a), 1);
        assert_eq!(e.dp(), 0);
    }

    #[test]
    fn redundant_adjacency_counted_twice() {
        let p = c("+r0 +r1 -r2 +1 +r2 -r1 -r0");
        let a = Adjacency::new(SignedToken::plus("r1").right(), SignedToken::minus("r2").left());
        assert_eq!(p.adjacency_multiset().count(&a), 2);
    }

    #[test]
    fn reversal_errors() {
        let p = c("+a +1 +a");
        assert!(matches!(p.apply_reversal(1, 3), Err(Error::NotSymmetric { .. })));
        assert!(matches!(p.apply_reversal(0, 3), Err(Error::OutOfRange { .. })));
        assert!(matches!(p.apply_reversal(2, 2), Err(Error::OutOfRange { .. })));
        assert_eq!(p.apply_reversal(0, 4).unwrap(), c("-a -1 -a"));
    }

    #[test]
    fn duplication_numbers_and_related() {
        assert_eq!(c("+a +a +a").dp(), 3);
        assert!(!c("+a").is_related(&c("+a +a")));
        let d = c("+1 -r1 +2 +r1").duplication_numbers();
        assert_eq!(d.get("r1"), Some(&2));
        assert_eq!(d.get("1"), Some(&1));
    }

    #[test]
    fn replay_reports_step() {
        let p = c("+a +1 -a");
        assert_eq!(p.replay(&ReversalTrace::new(vec![(1, 3)])).unwrap(), c("+a -1 -a"));
        let err = p.replay(&ReversalTrace::new(vec![(1, 3), (1, 2)])).unwrap_err();
        assert!(matches!(err, Error::TraceStep { step: 2, .. }));
    }

    #[test]
    fn trace_file_round_trip() {
        let p = c("+a +1 -a");
        let t = ReversalTrace::new(vec![(1, 3), (0, 4)]);
        let text = t.to_file_string(&p);
        let (start, back) = ReversalTrace::parse_file(&text).unwrap();
        assert_eq!(start, Some(p));
        assert_eq!(back, t);
    }
}

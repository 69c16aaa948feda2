use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use num_rational::Ratio;

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Overlap graph of intervals: vertices are adjacent iff their intervals
/// intersect and neither contains the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleGraphInstance {
    pub names: Vec<String>,
    pub intervals: Vec<(Rational, Rational)>,
    pub terminals: Vec<usize>,
}

impl CircleGraphInstance {
    pub fn new(
        names: Vec<String>,
        intervals: Vec<(Rational, Rational)>,
        terminals: Vec<usize>,
    ) -> Result<Self> {
        let g = CircleGraphInstance { names, intervals, terminals };
        g.validate()?;
        Ok(g)
    }

    pub fn from_integers(items: &[(&str, i64, i64)], terminals: &[&str]) -> Result<Self> {
        let names: Vec<String> = items.iter().map(|x| x.0.to_string()).collect();
        let intervals = items.iter().map(|x| (Rational::from(x.1), Rational::from(x.2))).collect();
        let terms = terminals
            .iter()
            .map(|t| {
                names
                    .iter()
                    .position(|n| n == t)
                    .ok_or_else(|| Error::InvalidInstance(format!("unknown terminal `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(names, intervals, terms)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidInstance(m));
        if self.names.len() != self.intervals.len() {
            return bad("names and intervals differ in length".into());
        }
        if self.terminals.is_empty() {
            return bad("no terminals".into());
        }
        let mut names = BTreeSet::new();
        for n in &self.names {
            if n.is_empty() || n.chars().any(char::is_whitespace) || !names.insert(n) {
                return bad(format!("bad or duplicate vertex name `{n}`"));
            }
        }
        let mut ends = BTreeSet::new();
        for (k, &(l, r)) in self.intervals.iter().enumerate() {
            if l >= r {
                return bad(format!("interval {} has left >= right", self.names[k]));
            }
            if !ends.insert(l) || !ends.insert(r) {
                return bad(format!("endpoint of {} is shared", self.names[k]));
            }
        }
        let mut terms = BTreeSet::new();
        for &t in &self.terminals {
            if t >= self.names.len() || !terms.insert(t) {
                return bad(format!("bad terminal index {t}"));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_terminal(&self, v: usize) -> bool {
        self.terminals.contains(&v)
    }

    pub fn overlaps(&self, u: usize, v: usize) -> bool {
        let (a, b) = (self.intervals[u], self.intervals[v]);
        (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        (0..n).map(|u| (0..n).filter(|&v| v != u && self.overlaps(u, v)).collect()).collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.overlaps(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Keeps only the listed vertices (terminals among them stay terminals).
    pub fn induced(&self, keep: &[usize]) -> Result<Self> {
        let map: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        let intervals = keep.iter().map(|&v| self.intervals[v]).collect();
        let terminals = self.terminals.iter().filter_map(|t| map.get(t).copied()).collect();
        Self::new(names, intervals, terminals)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (n, (l, r)) in self.names.iter().zip(&self.intervals) {
            let _ = writeln!(s, "interval {n} {l} {r}");
        }
        let t: Vec<&str> = self.terminals.iter().map(|&t| self.names[t].as_str()).collect();
        let _ = writeln!(s, "terminals {}", t.join(" "));
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut names = Vec::new();
        let mut intervals = Vec::new();
        let mut term_names: Vec<String> = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse(format!("line {}: `{raw}`", k + 1));
            match parts[0] {
                "interval" if parts.len() == 4 => {
                    names.push(parts[1].to_string());
                    let l = parse_rational(parts[2]).ok_or_else(bad)?;
                    let r = parse_rational(parts[3]).ok_or_else(bad)?;
                    intervals.push((l, r));
                }
                "terminals" => term_names.extend(parts[1..].iter().map(|s| s.to_string())),
                _ => return Err(bad()),
            }
        }
        let terminals = term_names
            .iter()
            .map(|t| {
                names
                    .iter()
                    .position(|n| n == t)
                    .ok_or_else(|| Error::Parse(format!("unknown terminal `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(names, intervals, terminals)
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((a, b)) => {
            let d: i64 = b.parse().ok()?;
            let n: i64 = a.parse().ok()?;
            (d != 0).then(|| Rational::new(n, d))
        }
        None => s.parse::<i64>().ok().map(Rational::from),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overlap_rule() {
        let g =
            CircleGraphInstance::from_integers(&[("a", 1, 4), ("b", 2, 6), ("c", 3, 5), ("d", 7, 8)], &["a"])
                .unwrap();
        assert!(g.overlaps(0, 1));
        assert!(!g.overlaps(0, 3));
        assert!(!g.overlaps(1, 2));
        assert!(g.overlaps(0, 2));
    }

    #[test]
    fn text_round_trip() {
        let text = "interval a 1/2 3\ninterval b 2 7/2\nterminals a b\n";
        let g = CircleGraphInstance::parse(text).unwrap();
        assert_eq!(g.intervals[0].0, Rational::new(1, 2));
        assert_eq!(CircleGraphInstance::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn rejects_shared_endpoint() {
        assert!(CircleGraphInstance::from_integers(&[("a", 1, 4), ("b", 4, 6)], &["a"]).is_err());
        assert!(CircleGraphInstance::from_integers(&[("a", 1, 4)], &[]).is_err());
    }
}

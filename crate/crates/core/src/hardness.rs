//! Reduction gadgets: MAX-(3,B2)-SAT to Steiner tree on circle graphs, and
//! Steiner tree on circle graphs to minimum sorting by symmetric reversals.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_rational::Ratio;

use crate::chromosome::{Chromosome, Orientation, SignedToken, SENTINEL};
use crate::error::{Error, Result};
use crate::oracle::bfs::{bfs_distance, SearchStatus};
use crate::oracle::circle::{CircleGraphInstance, Rational};
use crate::oracle::steiner::steiner_exact;

/// CNF formula with 3-literal clauses in which every variable occurs exactly
/// twice positively and twice negatively. Literals are signed 1-based
/// variable indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatB2Instance {
    pub n: usize,
    pub clauses: Vec<[i32; 3]>,
}

impl SatB2Instance {
    pub fn new(n: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        let s = SatB2Instance { n, clauses };
        s.validate()?;
        Ok(s)
    }

    /// The three-variable, four-clause formula used as the running example.
    pub fn example() -> Self {
        SatB2Instance::new(3, vec![[1, 2, 3], [1, -2, -3], [-1, -2, 3], [-1, 2, -3]])
            .expect("example formula is B2")
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidInstance(m));
        if self.n == 0 {
            return bad("no variables".into());
        }
        let mut pos = vec![0; self.n + 1];
        let mut neg = vec![0; self.n + 1];
        for (a, c) in self.clauses.iter().enumerate() {
            let mut vars = BTreeSet::new();
            for &lit in c {
                let v = lit.unsigned_abs() as usize;
                if lit == 0 || v > self.n {
                    return bad(format!("clause {} has literal {lit} out of range", a + 1));
                }
                if !vars.insert(v) {
                    return bad(format!("clause {} repeats variable {v}", a + 1));
                }
                if lit > 0 {
                    pos[v] += 1;
                } else {
                    neg[v] += 1;
                }
            }
        }
        for v in 1..=self.n {
            if pos[v] != 2 || neg[v] != 2 {
                return bad(format!(
                    "variable {v} occurs {} times positively and {} times negatively",
                    pos[v], neg[v]
                ));
            }
        }
        Ok(())
    }

    /// 1-based clause indices `(j, k)` of the positive and `(j', k')` of the
    /// negative occurrences of variable `v`, each pair ascending.
    pub fn occurrences(&self, v: usize) -> ([usize; 2], [usize; 2]) {
        let mut p = Vec::new();
        let mut q = Vec::new();
        for (a, c) in self.clauses.iter().enumerate() {
            for &lit in c {
                if lit.unsigned_abs() as usize == v {
                    if lit > 0 {
                        p.push(a + 1);
                    } else {
                        q.push(a + 1);
                    }
                }
            }
        }
        ([p[0], p[1]], [q[0], q[1]])
    }

    /// DIMACS-like text: optional `c` comment lines, a `p cnf <n> <m>`
    /// header, then clauses terminated by `0`.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut n = None;
        let mut lits: Vec<i32> = Vec::new();
        let mut clauses = Vec::new();
        for raw in text.lines() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                if parts.len() != 3 || parts[0] != "cnf" {
                    return Err(Error::Parse(format!("bad header `{line}`")));
                }
                n = Some(parts[1].parse().map_err(|_| Error::Parse(format!("bad header `{line}`")))?);
                continue;
            }
            for tok in line.split_whitespace() {
                let x: i32 = tok.parse().map_err(|_| Error::Parse(format!("bad literal `{tok}`")))?;
                if x == 0 {
                    if lits.len() != 3 {
                        return Err(Error::InvalidInstance(format!(
                            "clause {} has {} literals",
                            clauses.len() + 1,
                            lits.len()
                        )));
                    }
                    clauses.push([lits[0], lits[1], lits[2]]);
                    lits.clear();
                } else {
                    lits.push(x);
                }
            }
        }
        if !lits.is_empty() {
            return Err(Error::Parse("last clause is not terminated by 0".into()));
        }
        let n = n.ok_or_else(|| Error::Parse("missing `p cnf` header".into()))?;
        Self::new(n, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.n, self.clauses.len());
        for c in &self.clauses {
            s.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        s
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0)))
    }

    /// A satisfying assignment by exhaustive search, for small `n`.
    pub fn solve_brute_force(&self) -> Option<Vec<bool>> {
        assert!(self.n <= 24, "brute force is limited to 24 variables");
        (0u32..1 << self.n)
            .map(|mask| (0..self.n).map(|v| mask >> v & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.satisfied_by(a))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// Ladder terminal `b`.
    TermB,
    /// Literal terminal `f`.
    TermF,
    /// Clause terminal `c`.
    TermC,
    /// Subtree terminal `t`.
    TermT,
    /// Root terminal `r`.
    TermR,
    /// Ladder candidate `B`.
    LadderB,
    /// Positive selector `P`.
    SelP,
    /// Negative selector `N`.
    SelN,
    /// Literal connector `D`.
    ConD,
    /// Clause connector `G`.
    ConG,
}

impl Role {
    pub fn is_terminal(self) -> bool {
        matches!(self, Role::TermB | Role::TermF | Role::TermC | Role::TermT | Role::TermR)
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::TermB => "b",
            Role::TermF => "f",
            Role::TermC => "c",
            Role::TermT => "t",
            Role::TermR => "r",
            Role::LadderB => "B",
            Role::SelP => "P",
            Role::SelN => "N",
            Role::ConD => "D",
            Role::ConG => "G",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetSteinerInstance {
    pub base: CircleGraphInstance,
    pub roles: Vec<Role>,
    /// Variable (1-based) each vertex belongs to; `None` for clause and root
    /// intervals.
    pub variable: Vec<Option<usize>>,
    /// Clause (1-based) of each clause interval.
    pub clause: Vec<Option<usize>>,
}

impl GadgetSteinerInstance {
    pub fn index(&self, name: &str) -> Option<usize> {
        self.base.index_of(name)
    }

    /// The 14 candidates per variable selected by `assignment`.
    pub fn assignment_witness(&self, sat: &SatB2Instance, assignment: &[bool]) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for i in 1..=sat.n {
            let ([j, k], [j2, k2]) = sat.occurrences(i);
            let names: Vec<String> = if assignment[i - 1] {
                vec![
                    format!("P[{i}]_1"),
                    format!("P[{i}]_2"),
                    format!("D[{i}]^{j2}"),
                    format!("D[{i}]^{k2}"),
                    format!("G[{i}]^{j}"),
                    format!("G[{i}]^{k}"),
                    format!("B[{i}]_1^3"),
                    format!("B[{i}]_2^3"),
                    format!("B[{i}]_3^6"),
                    format!("B[{i}]_4^6"),
                    format!("B[{i}]_1^4"),
                    format!("B[{i}]_2^4"),
                    format!("B[{i}]_3^1"),
                    format!("B[{i}]_4^1"),
                ]
            } else {
                vec![
                    format!("N[{i}]_1"),
                    format!("N[{i}]_2"),
                    format!("D[{i}]^{j}"),
                    format!("D[{i}]^{k}"),
                    format!("G[{i}]^{j2}"),
                    format!("G[{i}]^{k2}"),
                    format!("B[{i}]_1^1"),
                    format!("B[{i}]_2^1"),
                    format!("B[{i}]_3^4"),
                    format!("B[{i}]_4^4"),
                    format!("B[{i}]_1^6"),
                    format!("B[{i}]_2^6"),
                    format!("B[{i}]_3^3"),
                    format!("B[{i}]_4^3"),
                ]
            };
            for name in names {
                out.push(
                    self.index(&name)
                        .ok_or_else(|| Error::InvalidInstance(format!("missing vertex {name}")))?,
                );
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Sub-instance on one variable's intervals, the root intervals, and the
    /// listed clause intervals (1-based), with coordinates unchanged.
    pub fn restrict_to_variable(&self, var: usize, clauses: &[usize]) -> Result<CircleGraphInstance> {
        let keep: Vec<usize> = (0..self.base.len())
            .filter(|&v| match (self.variable[v], self.clause[v]) {
                (Some(i), _) => i == var,
                (None, Some(a)) => clauses.contains(&a),
                (None, None) => true,
            })
            .collect();
        self.base.induced(&keep)
    }
}

struct Builder {
    names: Vec<String>,
    intervals: Vec<(Rational, Rational)>,
    roles: Vec<Role>,
    variable: Vec<Option<usize>>,
    clause: Vec<Option<usize>>,
}

impl Builder {
    fn add(&mut self, name: String, l: i64, r: i64, role: Role, var: Option<usize>, clause: Option<usize>) {
        self.names.push(name);
        self.intervals.push((Rational::from(l), Rational::from(r)));
        self.roles.push(role);
        self.variable.push(var);
        self.clause.push(clause);
    }
}

/// Interval gadget whose minimum Steiner set has `14n` vertices iff the
/// formula is satisfiable.
pub fn sat_to_steiner(s: &SatB2Instance) -> Result<GadgetSteinerInstance> {
    s.validate()?;
    let n = s.n as i64;
    let mut b = Builder {
        names: Vec::new(),
        intervals: Vec::new(),
        roles: Vec::new(),
        variable: Vec::new(),
        clause: Vec::new(),
    };
    for iv in 1..=s.n {
        let i = iv as i64;
        let q = 300 * (i - 1);
        let var = Some(iv);
        for a in 1..=4i64 {
            for bb in 1..=6i64 {
                let lo = q + 50 * (a - 1) + 4 * (bb - 1) + 1;
                let (role, letter) =
                    if bb == 2 || bb == 5 { (Role::TermB, 'b') } else { (Role::LadderB, 'B') };
                b.add(format!("{letter}[{iv}]_{a}^{bb}"), lo, lo + 6, role, var, None);
            }
        }
        b.add(format!("P[{iv}]_1"), q + 12, q + 125, Role::SelP, var, None);
        b.add(format!("P[{iv}]_2"), q + 62, q + 175, Role::SelP, var, None);
        b.add(format!("N[{iv}]_1"), q + 3, q + 53, Role::SelN, var, None);
        b.add(format!("N[{iv}]_2"), q + 116, q + 166, Role::SelN, var, None);
        let ([j, k], [j2, k2]) = s.occurrences(iv);
        let clause_point = |c: usize| 300 * n + 3 * c as i64 * n + i;
        let literals = [(j, 200, 25), (k, 220, 75), (j2, 240, 103), (k2, 260, 153)];
        for (c, f_lo, d_lo) in literals {
            b.add(format!("f[{iv}]^{c}"), q + f_lo, q + f_lo + 10, Role::TermF, var, None);
            b.add(format!("G[{iv}]^{c}"), q + f_lo + 9, clause_point(c), Role::ConG, var, None);
            b.add(format!("D[{iv}]^{c}"), q + d_lo, q + f_lo + 1, Role::ConD, var, None);
        }
        for a in 1..=4i64 {
            b.add(format!("t[{iv}]_{a}"), -(4 * i + a) + 4, q + 50 * a - 1, Role::TermT, var, None);
        }
    }
    for (a0, _) in s.clauses.iter().enumerate() {
        let a = (a0 + 1) as i64;
        b.add(
            format!("c_{}", a0 + 1),
            300 * n + 3 * a * n,
            300 * n + 3 * a * n + 2 * n + 1,
            Role::TermC,
            None,
            Some(a0 + 1),
        );
    }
    b.add("r1".into(), -4 * n - 1, 301 * n, Role::TermR, None, None);
    b.add("r2".into(), -4 * n - 2, 0, Role::TermR, None, None);
    let terminals = (0..b.names.len()).filter(|&v| b.roles[v].is_terminal()).collect();
    let base = CircleGraphInstance::new(b.names, b.intervals, terminals)?;
    Ok(GadgetSteinerInstance { base, roles: b.roles, variable: b.variable, clause: b.clause })
}

/// What a vertex of the circle graph contributes to the chromosome pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpawnKind {
    /// Two crossing non-opposite 2-cycles, repeats `v_1` and `v_2`.
    Terminal,
    /// A terminal that also carries the opposite 2-cycle `v_3`.
    ChosenTerminal,
    /// Two 1-cycles of repeat `v_1`.
    Candidate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpawnRecord {
    pub vertex: String,
    pub kind: SpawnKind,
    pub repeats: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmsrGadgetInstance {
    pub pi: Chromosome,
    pub tau: Chromosome,
    /// The pair before gene insertion.
    pub raw_pi: Chromosome,
    pub raw_tau: Chromosome,
    pub terminal_count: usize,
    pub chosen_terminal: usize,
    pub log: Vec<SpawnRecord>,
}

impl SmsrGadgetInstance {
    /// Predicted distance for a Steiner set of size `k`.
    pub fn predicted_distance(&self, k: usize) -> usize {
        2 * self.terminal_count + 2 * k + 1
    }

    /// Text form: `pi` and `tau` lines.
    pub fn to_text(&self) -> String {
        format!("{}\n{}\n", self.pi, self.tau)
    }
}

#[derive(Clone, Debug)]
struct Occ {
    lo: i64,
    hi: i64,
    symbol: String,
    plus: bool,
}

/// Chromosome pair whose distance is `2|X| + 2k + 1` when the minimum
/// Steiner set of `g` has size `k`. `chosen` defaults to the terminal with
/// the smallest right endpoint.
pub fn steiner_to_smsr(g: &CircleGraphInstance, chosen: Option<usize>) -> Result<SmsrGadgetInstance> {
    g.validate()?;
    let x = match chosen {
        Some(x) if g.is_terminal(x) => x,
        Some(x) => {
            return Err(Error::InvalidInstance(format!(
                "chosen vertex {} is not a terminal",
                g.names.get(x).map_or("?", String::as_str)
            )))
        }
        None => *g
            .terminals
            .iter()
            .min_by(|&&a, &&b| g.intervals[a].1.cmp(&g.intervals[b].1))
            .expect("validated instances have terminals"),
    };
    let mut ends: Vec<Ratio<i64>> = g.intervals.iter().flat_map(|&(l, r)| [l, r]).collect();
    ends.sort();
    let rank: HashMap<Ratio<i64>, i64> = ends.iter().enumerate().map(|(k, &e)| (e, k as i64 + 1)).collect();
    let last = 16 * (ends.len() as i64 + 1);

    let mut occ = vec![
        Occ { lo: -1, hi: 1, symbol: SENTINEL.into(), plus: true },
        Occ { lo: last - 1, hi: last + 1, symbol: SENTINEL.into(), plus: false },
    ];
    let mut blue: Vec<(i64, i64)> = vec![(-1, 1), (last - 1, last + 1)];
    let mut log = Vec::new();
    let push = |occ: &mut Vec<Occ>, lo: i64, hi: i64, sym: &str, plus: bool| {
        occ.push(Occ { lo, hi, symbol: sym.to_string(), plus });
    };
    for v in 0..g.len() {
        let name = &g.names[v];
        let l = 16 * rank[&g.intervals[v].0];
        let r = 16 * rank[&g.intervals[v].1];
        let s1 = format!("{name}_1");
        if g.is_terminal(v) {
            let s2 = format!("{name}_2");
            push(&mut occ, l - 1, l + 1, &s1, true);
            push(&mut occ, r - 1, r + 1, &s1, true);
            blue.push((l - 1, r + 1));
            blue.push((l + 1, r - 1));
            push(&mut occ, r - 3, r - 2, &s2, true);
            push(&mut occ, r + 2, r + 3, &s2, true);
            blue.push((r - 3, r + 3));
            blue.push((r - 2, r + 2));
            let mut repeats = vec![s1, s2];
            let kind = if v == x {
                let s3 = format!("{name}_3");
                push(&mut occ, r - 5, r - 4, &s3, true);
                push(&mut occ, r + 4, r + 5, &s3, false);
                blue.push((r - 5, r + 4));
                blue.push((r - 4, r + 5));
                repeats.push(s3);
                SpawnKind::ChosenTerminal
            } else {
                SpawnKind::Terminal
            };
            log.push(SpawnRecord { vertex: name.clone(), kind, repeats });
        } else {
            push(&mut occ, l - 1, l + 1, &s1, true);
            push(&mut occ, r - 1, r + 1, &s1, true);
            blue.push((l - 1, l + 1));
            blue.push((r - 1, r + 1));
            log.push(SpawnRecord { vertex: name.clone(), kind: SpawnKind::Candidate, repeats: vec![s1] });
        }
    }
    occ.sort_by_key(|o| o.lo);
    let m = occ.len();

    let mut symbols: BTreeSet<String> = occ.iter().map(|o| o.symbol.clone()).collect();
    let genes: Vec<String> = (1..m).map(|k| format!("g_{k}")).collect();
    for gname in &genes {
        if !symbols.insert(gname.clone()) {
            return Err(Error::InvalidInstance(format!("vertex names collide with gene `{gname}`")));
        }
    }
    if occ.iter().any(|o| !crate::chromosome::valid_symbol(&o.symbol)) {
        return Err(Error::InvalidInstance("vertex name is not a valid symbol".into()));
    }

    // node coordinate -> (occurrence, is left node)
    let mut node: HashMap<i64, (usize, bool)> = HashMap::with_capacity(2 * m);
    for (k, o) in occ.iter().enumerate() {
        node.insert(o.lo, (k, true));
        node.insert(o.hi, (k, false));
    }
    let mut partner: HashMap<i64, i64> = HashMap::with_capacity(2 * m);
    for &(a, b) in &blue {
        if partner.insert(a, b).is_some() || partner.insert(b, a).is_some() {
            return Err(Error::InvalidInstance("degenerate layout: node with two blue edges".into()));
        }
    }
    let is_head = |c: i64| {
        let (k, left) = node[&c];
        left == occ[k].plus
    };

    let tok = |sym: &str, plus: bool| {
        SignedToken::new(sym, if plus { Orientation::Plus } else { Orientation::Minus })
    };
    let mut raw_pi_tokens = Vec::with_capacity(m);
    let mut pi_tokens = Vec::with_capacity(2 * m);
    for (k, o) in occ.iter().enumerate() {
        if k > 0 {
            pi_tokens.push(tok(&genes[k - 1], true));
        }
        raw_pi_tokens.push(tok(&o.symbol, o.plus));
        pi_tokens.push(tok(&o.symbol, o.plus));
    }

    let mut raw_tau_tokens = Vec::with_capacity(m);
    let mut tau_tokens = Vec::with_capacity(2 * m);
    let mut cur = occ[0].lo;
    let end = occ[m - 1].hi;
    loop {
        let Some(&next) = partner.get(&cur) else {
            return Err(Error::InvalidInstance("degenerate layout: node without blue edge".into()));
        };
        let (k, _) = node[&cur];
        let t = tok(&occ[k].symbol, is_head(cur));
        raw_tau_tokens.push(t.clone());
        tau_tokens.push(t);
        if raw_tau_tokens.len() > m {
            return Err(Error::InvalidInstance("degenerate layout: blue-green walk loops".into()));
        }
        if next == end {
            break;
        }
        let (k2, left) = node[&next];
        if left {
            if k2 == 0 {
                return Err(Error::InvalidInstance("degenerate layout: walk leaves the chromosome".into()));
            }
            tau_tokens.push(tok(&genes[k2 - 1], false));
            cur = occ[k2 - 1].hi;
        } else {
            tau_tokens.push(tok(&genes[k2], true));
            cur = occ[k2 + 1].lo;
        }
    }
    if raw_tau_tokens.len() != m {
        return Err(Error::InvalidInstance(format!(
            "blue and green edges do not form a single path ({} of {m} occurrences reached)",
            raw_tau_tokens.len()
        )));
    }
    Ok(SmsrGadgetInstance {
        pi: Chromosome::from_tokens(pi_tokens)?,
        tau: Chromosome::from_tokens(tau_tokens)?,
        raw_pi: Chromosome::from_tokens(raw_pi_tokens)?,
        raw_tau: Chromosome::from_tokens(raw_tau_tokens)?,
        terminal_count: g.terminals.len(),
        chosen_terminal: x,
        log,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorrespondenceStatus {
    Pass,
    Fail(String),
    /// An oracle could not finish; not counted as a failure.
    CapExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceReport {
    /// Minimum Steiner set size, `None` if the terminals cannot be connected.
    pub k: Option<usize>,
    pub predicted: Option<usize>,
    /// Oracle distance, `None` if unreachable or capped.
    pub oracle: Option<usize>,
    pub explored: usize,
    pub status: CorrespondenceStatus,
}

impl fmt::Display for CorrespondenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |x: Option<usize>| x.map_or("none".to_string(), |v| v.to_string());
        writeln!(f, "steiner_k: {}", opt(self.k))?;
        writeln!(f, "predicted_distance: {}", opt(self.predicted))?;
        writeln!(f, "oracle_distance: {}", opt(self.oracle))?;
        writeln!(f, "states_explored: {}", self.explored)?;
        match &self.status {
            CorrespondenceStatus::Pass => writeln!(f, "status: pass"),
            CorrespondenceStatus::Fail(why) => writeln!(f, "status: fail ({why})"),
            CorrespondenceStatus::CapExceeded => writeln!(f, "status: cap-exceeded"),
        }
    }
}

/// Compares the exact Steiner optimum of `g` with the exact reversal
/// distance of `inst`.
pub fn verify_correspondence(
    inst: &SmsrGadgetInstance,
    g: &CircleGraphInstance,
    state_cap: usize,
) -> Result<CorrespondenceReport> {
    let k = steiner_exact(g).ok().map(|s| s.k);
    let predicted = k.map(|k| inst.predicted_distance(k));
    let bfs = bfs_distance(&inst.pi, &inst.tau, state_cap)?;
    let status = match (bfs.status, predicted) {
        (SearchStatus::CapExceeded, _) => CorrespondenceStatus::CapExceeded,
        (SearchStatus::Reachable, Some(p)) if bfs.distance == Some(p) => CorrespondenceStatus::Pass,
        (SearchStatus::Unreachable, None) => CorrespondenceStatus::Pass,
        (SearchStatus::Reachable, Some(p)) => CorrespondenceStatus::Fail(format!(
            "oracle distance {} differs from predicted {p}",
            bfs.distance.unwrap_or_default()
        )),
        (SearchStatus::Reachable, None) => {
            CorrespondenceStatus::Fail("terminals cannot be connected but the target is reachable".into())
        }
        (SearchStatus::Unreachable, Some(p)) => {
            CorrespondenceStatus::Fail(format!("predicted distance {p} but the target is unreachable"))
        }
    };
    Ok(CorrespondenceReport { k, predicted, oracle: bfs.distance, explored: bfs.explored, status })
}

/// The circle graph of the worked reduction example: terminals `x, y, z`.
pub fn example_circle_graph() -> CircleGraphInstance {
    CircleGraphInstance::from_integers(
        &[("x", 1, 4), ("y", 2, 6), ("u", 3, 8), ("w", 5, 11), ("v", 7, 10), ("z", 9, 12)],
        &["x", "y", "z"],
    )
    .expect("example graph is valid")
}

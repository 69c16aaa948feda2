use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use symrev::balanced::{balanced_distance, check_balanced};
use symrev::gen;
use symrev::hardness::example_circle_graph;
use symrev::oracle::bfs::SearchStatus;
use symrev::{
    bfs_distance, build_acg, build_bijection, build_ig_dp2, build_ig_general, decide, parse_chromosome_file,
    sat_to_steiner, simplify_pair, solve_balanced2, sort, steiner_to_smsr, Chromosome, CircleGraphInstance,
    Decision, NoReason, ReversalTrace, SatB2Instance, DEFAULT_STATE_CAP,
};

#[derive(Parser)]
#[command(
    name = "symrev",
    version,
    about = "Sort chromosomes with duplicated symbols by symmetric reversals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether PI can be transformed into TAU (exit 0 yes, 1 no).
    Decide { pi: PathBuf, tau: PathBuf },
    /// Print a reversal trace from PI to TAU.
    Sort {
        pi: PathBuf,
        tau: PathBuf,
        /// Minimum-length trace; requires a 2-balanced pair.
        #[arg(long)]
        optimal: bool,
        /// Dump the dp=2 intersection graph in DOT form.
        #[arg(long)]
        emit_graph: bool,
        /// Dump the cycles of the alternative-cycle graph.
        #[arg(long)]
        emit_acg: bool,
        /// Write the trace here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum number of reversals from PI to TAU.
    Distance {
        pi: PathBuf,
        tau: PathBuf,
        /// Exhaustive search; without it only 2-balanced pairs are accepted.
        #[arg(long)]
        exact: bool,
        /// State limit for the exhaustive search.
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        cap: usize,
    },
    /// Delete redundant repeats from a dp=2 pair and print the deletion log.
    Simplify { pi: PathBuf, tau: PathBuf },
    /// Print a seeded random pair, one chromosome per line.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Number of genes; defaults to the number of repeats.
        #[arg(long)]
        genes: Option<usize>,
        /// Largest duplication number of a repeat.
        #[arg(long, default_value_t = 2)]
        dp: usize,
        /// Every repeat appears in TAU in both orientations (needs dp 2).
        #[arg(long)]
        balanced: bool,
        /// Build TAU from PI by random reversals.
        #[arg(long)]
        solvable: bool,
    },
    /// Build hardness gadgets.
    Reduce {
        #[arg(value_enum)]
        kind: Reduction,
        /// Input file; the worked example is used when omitted.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Terminal carrying the opposite 2-cycle (steiner2smsr only).
        #[arg(long)]
        chosen: Option<String>,
    },
    /// Check that TRACE turns PI into TAU (exit 0 valid, 1 invalid).
    Verify { pi: PathBuf, tau: PathBuf, trace: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Reduction {
    /// DIMACS MAX-(3,B2)-SAT formula to circle-graph Steiner instance.
    Sat2steiner,
    /// Circle-graph Steiner instance to chromosome pair.
    Steiner2smsr,
}

/// Stable `key: value` report lines.
#[derive(Default)]
struct Report {
    lines: String,
}

impl Report {
    fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.add("command", command);
        r
    }

    fn add(&mut self, key: &str, value: impl std::fmt::Display) {
        let _ = writeln!(self.lines, "{key}: {value}");
    }

    fn digest(&mut self, key: &str, input: &Input) {
        self.add(key, &input.sha256);
    }

    fn finish(mut self, start: Instant) -> String {
        self.add("time_ms", start.elapsed().as_millis());
        self.lines
    }
}

struct Input {
    text: String,
    sha256: String,
}

fn read(path: &Path) -> anyhow::Result<Input> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let sha256 = hex::encode(Sha256::digest(&bytes));
    let text = String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))?;
    Ok(Input { text, sha256 })
}

fn chromosome(input: &Input, path: &Path) -> anyhow::Result<Chromosome> {
    let mut all =
        parse_chromosome_file(&input.text).with_context(|| format!("parsing {}", path.display()))?;
    if all.len() != 1 {
        bail!("{} holds {} chromosomes, expected exactly one", path.display(), all.len());
    }
    Ok(all.remove(0))
}

struct Pair {
    pi: Chromosome,
    tau: Chromosome,
    pi_in: Input,
    tau_in: Input,
}

fn load_pair(pi: &Path, tau: &Path) -> anyhow::Result<Pair> {
    let (pi_in, tau_in) = (read(pi)?, read(tau)?);
    let p = chromosome(&pi_in, pi)?;
    let t = chromosome(&tau_in, tau)?;
    if !p.is_related(&t) {
        bail!("chromosomes are not related: duplication numbers differ");
    }
    Ok(Pair { pi: p, tau: t, pi_in, tau_in })
}

fn write_out(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn add_reason(r: &mut Report, reason: &NoReason) {
    r.add("reason", reason);
    match reason {
        NoReason::MultisetMismatch { witness } => r.add("witness_adjacency", witness),
        NoReason::Stranded { repeat } => r.add("witness_repeat", repeat),
    }
}

/// Graph size counters for a pair with equal adjacency multisets.
fn add_counters(r: &mut Report, p: &Pair) -> anyhow::Result<()> {
    if p.pi.adjacency_multiset() != p.tau.adjacency_multiset() {
        return Ok(());
    }
    let acg = build_acg(&p.pi, &p.tau, &build_bijection(&p.pi, &p.tau)?)?;
    let ig = build_ig_general(&acg);
    r.add("cycles", acg.cycles.len());
    r.add("vertices", ig.len());
    r.add("edges", ig.edge_count());
    Ok(())
}

fn cmd_decide(pi: &Path, tau: &Path) -> anyhow::Result<u8> {
    let start = Instant::now();
    let p = load_pair(pi, tau)?;
    let mut r = Report::new("decide");
    r.digest("pi_sha256", &p.pi_in);
    r.digest("tau_sha256", &p.tau_in);
    r.add("dp", p.pi.dp());
    let d = decide(&p.pi, &p.tau)?;
    let code = match &d {
        Decision::Yes => {
            r.add("answer", "yes");
            0
        }
        Decision::No(reason) => {
            r.add("answer", "no");
            add_reason(&mut r, reason);
            1
        }
    };
    add_counters(&mut r, &p)?;
    print!("{}", r.finish(start));
    Ok(code)
}

struct SortArgs<'a> {
    optimal: bool,
    emit_graph: bool,
    emit_acg: bool,
    out: Option<&'a Path>,
}

fn cmd_sort(pi: &Path, tau: &Path, a: SortArgs) -> anyhow::Result<u8> {
    let start = Instant::now();
    let p = load_pair(pi, tau)?;
    let mut r = Report::new(if a.optimal { "sort --optimal" } else { "sort" });
    r.digest("pi_sha256", &p.pi_in);
    r.digest("tau_sha256", &p.tau_in);
    if a.emit_graph {
        if p.pi.dp() > 2 {
            bail!("--emit-graph needs duplication number at most 2");
        }
        let s = simplify_pair(&p.pi, &p.tau)?;
        eprint!("{}", build_ig_dp2(&s.pi, &s.tau)?.to_dot());
    }
    if a.emit_acg && p.pi.adjacency_multiset() == p.tau.adjacency_multiset() {
        eprint!("{}", build_acg(&p.pi, &p.tau, &build_bijection(&p.pi, &p.tau)?)?.dump());
    }
    let trace = if a.optimal {
        check_balanced(&p.pi, &p.tau).context("--optimal needs a 2-balanced pair")?;
        let run = solve_balanced2(&p.pi, &p.tau)?;
        r.add("optimal", "yes");
        r.add("negative_segments", run.mns_history[0]);
        run.trace
    } else {
        if let Decision::No(reason) = decide(&p.pi, &p.tau)? {
            r.add("answer", "no");
            add_reason(&mut r, &reason);
            print!("{}", r.finish(start));
            return Ok(1);
        }
        sort(&p.pi, &p.tau)?
    };
    r.add("answer", "yes");
    r.add("steps", trace.len());
    let text = trace.to_file_string(&p.pi);
    match a.out {
        Some(path) => {
            write_out(Some(path), &text)?;
            r.add("trace", path.display());
            print!("{}", r.finish(start));
        }
        None => {
            print!("{text}");
            eprint!("{}", r.finish(start));
        }
    }
    Ok(0)
}

fn cmd_distance(pi: &Path, tau: &Path, exact: bool, cap: usize) -> anyhow::Result<u8> {
    let start = Instant::now();
    let p = load_pair(pi, tau)?;
    let mut r = Report::new(if exact { "distance --exact" } else { "distance" });
    r.digest("pi_sha256", &p.pi_in);
    r.digest("tau_sha256", &p.tau_in);
    if !exact {
        check_balanced(&p.pi, &p.tau).context("pass --exact for pairs that are not 2-balanced")?;
        r.add("method", "balanced");
        r.add("distance", balanced_distance(&p.pi, &p.tau)?);
        print!("{}", r.finish(start));
        return Ok(0);
    }
    r.add("method", "exhaustive");
    let res = bfs_distance(&p.pi, &p.tau, cap)?;
    r.add("states_explored", res.explored);
    let code = match res.status {
        SearchStatus::Reachable => {
            r.add("status", "reachable");
            r.add("distance", res.distance.unwrap_or_default());
            if let Some(w) = &res.witness {
                let steps: Vec<String> = w.steps.iter().map(|(i, j)| format!("({i},{j})")).collect();
                r.add("witness", steps.join(" "));
            }
            0
        }
        SearchStatus::Unreachable => {
            r.add("status", "unreachable");
            1
        }
        SearchStatus::CapExceeded => {
            r.add("status", "cap-exceeded");
            r.add("cap", cap);
            2
        }
    };
    print!("{}", r.finish(start));
    Ok(code)
}

fn cmd_simplify(pi: &Path, tau: &Path) -> anyhow::Result<u8> {
    let start = Instant::now();
    let p = load_pair(pi, tau)?;
    let s = simplify_pair(&p.pi, &p.tau)?;
    let mut r = Report::new("simplify");
    r.digest("pi_sha256", &p.pi_in);
    r.digest("tau_sha256", &p.tau_in);
    r.add("pi", &s.pi);
    r.add("tau", &s.tau);
    r.add("deletions", s.log.len());
    for d in &s.log {
        r.add("delete", format!("{} kept={} witness={}", d.deleted, d.kept, d.witness));
    }
    print!("{}", r.finish(start));
    Ok(0)
}

struct GenArgs {
    seed: u64,
    repeats: usize,
    genes: Option<usize>,
    dp: usize,
    balanced: bool,
    solvable: bool,
}

fn cmd_gen(a: GenArgs) -> anyhow::Result<u8> {
    let genes = a.genes.unwrap_or(a.repeats);
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let (pi, tau) = if a.balanced {
        if a.dp != 2 {
            bail!("--balanced requires --dp 2, got {}", a.dp);
        }
        if a.solvable {
            let tau = gen::random_balanced_target(&mut rng, genes, a.repeats);
            let steps = 2 * a.repeats + 1;
            (gen::scramble(&mut rng, &tau, steps), tau)
        } else {
            gen::random_balanced_pair(&mut rng, genes, a.repeats)?
        }
    } else {
        gen::random_pair(&mut rng, genes, a.repeats, a.dp, a.solvable)?
    };
    println!("{pi}\n{tau}");
    Ok(0)
}

fn cmd_reduce(
    kind: Reduction,
    input: Option<&Path>,
    out: Option<&Path>,
    chosen: Option<&str>,
) -> anyhow::Result<u8> {
    let start = Instant::now();
    let text = input.map(read).transpose()?;
    let mut r = Report::new(match kind {
        Reduction::Sat2steiner => "reduce sat2steiner",
        Reduction::Steiner2smsr => "reduce steiner2smsr",
    });
    if let Some(t) = &text {
        r.digest("input_sha256", t);
    }
    let payload = match kind {
        Reduction::Sat2steiner => {
            let sat = match &text {
                Some(t) => SatB2Instance::parse_dimacs(&t.text)?,
                None => SatB2Instance::example(),
            };
            let g = sat_to_steiner(&sat)?;
            r.add("variables", sat.n);
            r.add("clauses", sat.clauses.len());
            r.add("vertices", g.base.len());
            r.add("terminals", g.base.terminals.len());
            r.add("target_k", 14 * sat.n);
            g.base.to_text()
        }
        Reduction::Steiner2smsr => {
            let g = match &text {
                Some(t) => CircleGraphInstance::parse(&t.text)?,
                None => example_circle_graph(),
            };
            let x = match chosen {
                Some(name) => Some(g.index_of(name).with_context(|| format!("no vertex named {name}"))?),
                None => None,
            };
            let inst = steiner_to_smsr(&g, x)?;
            r.add("terminals", inst.terminal_count);
            r.add("chosen_terminal", &g.names[inst.chosen_terminal]);
            r.add("tokens", inst.pi.len());
            r.add("distance_formula", "2*terminals + 2*k + 1");
            inst.to_text()
        }
    };
    match out {
        Some(path) => {
            write_out(Some(path), &payload)?;
            r.add("output", path.display());
            print!("{}", r.finish(start));
        }
        None => {
            print!("{payload}");
            eprint!("{}", r.finish(start));
        }
    }
    Ok(0)
}

fn cmd_verify(pi: &Path, tau: &Path, trace: &Path) -> anyhow::Result<u8> {
    let start = Instant::now();
    let p = load_pair(pi, tau)?;
    let t_in = read(trace)?;
    let (header, t) =
        ReversalTrace::parse_file(&t_in.text).with_context(|| format!("parsing {}", trace.display()))?;
    let mut r = Report::new("verify");
    r.digest("pi_sha256", &p.pi_in);
    r.digest("tau_sha256", &p.tau_in);
    r.digest("trace_sha256", &t_in);
    r.add("steps", t.len());
    let verdict = if header.as_ref().is_some_and(|h| *h != p.pi) {
        Err("trace start differs from pi".to_string())
    } else {
        let mut c = p.pi.clone();
        let mut bad = None;
        for (k, &(i, j)) in t.steps.iter().enumerate() {
            if let Err(e) = c.reverse_in_place(i, j) {
                bad = Some(format!("invalid step {}: {e}", k + 1));
                break;
            }
        }
        match bad {
            Some(msg) => Err(msg),
            None if c != p.tau => Err(format!("final mismatch: reached {c}")),
            None => Ok(()),
        }
    };
    let code = match verdict {
        Ok(()) => {
            r.add("result", "valid");
            0
        }
        Err(msg) => {
            r.add("result", "invalid");
            r.add("reason", msg);
            1
        }
    };
    print!("{}", r.finish(start));
    Ok(code)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Decide { pi, tau } => cmd_decide(&pi, &tau),
        Command::Sort { pi, tau, optimal, emit_graph, emit_acg, out } => {
            cmd_sort(&pi, &tau, SortArgs { optimal, emit_graph, emit_acg, out: out.as_deref() })
        }
        Command::Distance { pi, tau, exact, cap } => cmd_distance(&pi, &tau, exact, cap),
        Command::Simplify { pi, tau } => cmd_simplify(&pi, &tau),
        Command::Gen { seed, repeats, genes, dp, balanced, solvable } => {
            cmd_gen(GenArgs { seed, repeats, genes, dp, balanced, solvable })
        }
        Command::Reduce { kind, input, out, chosen } => {
            cmd_reduce(kind, input.as_deref(), out.as_deref(), chosen.as_deref())
        }
        Command::Verify { pi, tau, trace } => cmd_verify(&pi, &tau, &trace),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

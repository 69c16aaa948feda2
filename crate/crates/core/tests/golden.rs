//! Worked examples with known answers.

use symrev::balanced::balanced_distance;
use symrev::dp2::{classify_parity, Color, Parity};
use symrev::simplify::{is_simple, lift_trace};
use symrev::*;

fn c(s: &str) -> Chromosome {
    Chromosome::parse(s).unwrap()
}

fn three_repeat_pair() -> (Chromosome, Chromosome) {
    (c("+r0 +r1 +1 +r2 +r3 +r1 -r2 -2 +r3 -r0"), c("+r0 +r1 -r2 -2 +r3 +r1 +1 +r2 +r3 -r0"))
}

#[test]
fn parse_inserts_sentinels() {
    let a = c("+1 -r1 +2 +r1");
    assert_eq!(a.bracketed("r0"), "[+r0,+1,-r1,+2,+r1,-r0]");
    assert_eq!(a, c("+r0 +1 -r1 +2 +r1 -r0"));
    assert!(Chromosome::parse("+1 r2").is_err());
    assert!(Chromosome::parse("+1 -r0 +2").is_err());
    assert!(Chromosome::parse("-r0 +1 +r0").is_err());
}

#[test]
fn adjacency_multiset_example() {
    use End::{Head as H, Tail as T};
    let node = |s: &str, e: End| EndNode { symbol: s.into(), end: e };
    let adj = |a: &str, x: End, b: &str, y: End| Adjacency::new(node(a, x), node(b, y));
    let m = c("+1 -r1 +2 +r1").adjacency_multiset();
    assert_eq!(m.total(), 5);
    for a in [
        adj("r0", T, "1", H),
        adj("1", T, "r1", T),
        adj("r1", H, "2", H),
        adj("2", T, "r1", H),
        adj("r1", T, "r0", T),
    ] {
        assert_eq!(m.count(&a), 1, "{a}");
    }
    let e = c("").adjacency_multiset();
    assert_eq!(e.total(), 1);
    assert_eq!(e.count(&adj("r0", T, "r0", T)), 1);
    let m = c("+r1 -r2 +1 +r2 -r1").adjacency_multiset();
    assert_eq!(m.count(&adj("r1", T, "r2", T)), 2);
}

#[test]
fn reversal_examples() {
    let p = c("+1 -r1 +2 +r2 +r1 +r2");
    assert_eq!(p.apply_reversal(2, 5).unwrap().bracketed("r0"), "[+r0,+1,-r1,-r2,-2,+r1,+r2,-r0]");
    assert_eq!(p.apply_reversal(0, p.len() + 1).unwrap(), p.flipped());
    assert!(matches!(c("+a +1 +a").apply_reversal(1, 3), Err(Error::NotSymmetric { .. })));
    assert!(matches!(p.apply_reversal(2, 9), Err(Error::OutOfRange { .. })));
}

#[test]
fn duplication_numbers_and_relatedness() {
    let p = c("+1 -r1 +2 +r1");
    let d = p.duplication_numbers();
    assert_eq!((d["1"], d["2"], d["r1"], p.dp()), (1, 1, 2, 2));
    assert_eq!(c("").dp(), 0);
    assert_eq!(c("+a +a +a").dp(), 3);
    let (pi, tau) = three_repeat_pair();
    assert!(pi.is_related(&tau));
    assert!(!c("+a").is_related(&c("+a +a")));
}

#[test]
fn replay_examples() {
    let (pi, _) = three_repeat_pair();
    assert_eq!(pi.replay(&ReversalTrace::default()).unwrap(), pi);
    let t = ReversalTrace::new(vec![(1, 3)]);
    assert_eq!(c("+a +1 -a").replay(&t).unwrap(), c("+a -1 -a"));
    let bad = ReversalTrace::new(vec![(1, 3), (1, 2)]);
    match c("+a +1 -a").replay(&bad) {
        Err(Error::TraceStep { step, .. }) => assert_eq!(step, 2),
        other => panic!("expected a step error, got {other:?}"),
    }
}

#[test]
fn trace_file_round_trip() {
    let (pi, tau) = three_repeat_pair();
    let t = sort(&pi, &tau).unwrap();
    let text = t.to_file_string(&pi);
    assert!(text.starts_with("@start "));
    let (start, back) = ReversalTrace::parse_file(&text).unwrap();
    assert_eq!(start.unwrap(), pi);
    assert_eq!(back, t);
}

#[test]
fn negative_example_is_multiset_mismatch() {
    let pi = c("+r1 -2 +r1 -1");
    let tau = c("-r1 +2 -r1 +1");
    for d in [decide(&pi, &tau).unwrap(), decide_dp2(&pi, &tau).unwrap()] {
        assert!(matches!(d, Decision::No(NoReason::MultisetMismatch { .. })), "{d:?}");
    }
}

#[test]
fn redundant_repeat_deleted() {
    let pi = c("+r1 -r2 +1 +r2 -r1");
    let s = simplify_pair(&pi, &pi).unwrap();
    assert_eq!(s.pi.bracketed("r0"), "[+r0,+r1,+1,-r1,-r0]");
    assert_eq!((&*s.log[0].kept, &*s.log[0].deleted), ("r1", "r2"));
    let lifted = lift_trace(&ReversalTrace::new(vec![(1, 3)]), &s.log, &pi).unwrap();
    assert_eq!(lifted.len(), 1);
    assert!(is_simple(&s.pi));
}

#[test]
fn chained_redundancy_needs_two_deletions() {
    let pi = c("+a +b +c +1 -c -b -a");
    // Same adjacencies with the gene reversed.
    let tau = c("+a +b +c -1 -c -b -a");
    assert_eq!(tau.adjacency_multiset(), pi.adjacency_multiset());
    let s = simplify_pair(&pi, &tau).unwrap();
    assert_eq!(s.log.len(), 2);
    assert!(is_simple(&s.pi) && is_simple(&s.tau));
    assert_eq!(s.pi, c("+a +1 -a"));
}

#[test]
fn three_repeat_parities_and_graph() {
    let (pi, tau) = three_repeat_pair();
    assert_eq!(classify_parity(&pi, &tau, "r1").unwrap(), Parity::Odd);
    assert_eq!(classify_parity(&pi, &tau, "r2").unwrap(), Parity::Even);
    assert_eq!(classify_parity(&pi, &tau, "r3").unwrap(), Parity::Odd);
    assert_eq!(classify_parity(&pi, &pi, "r1").unwrap(), Parity::Even);
    assert!(classify_parity(&pi, &tau, "1").is_err());
    let g = build_ig_dp2(&pi, &tau).unwrap();
    let summary: Vec<(&str, Color, u8)> =
        g.vertices.iter().map(|v| (&*v.repeat, v.color, v.weight)).collect();
    // Colour follows the orientations in π: only r2 has opposite copies.
    assert_eq!(summary, vec![("r1", Color::White, 1), ("r2", Color::Black, 2), ("r3", Color::White, 1)]);
    assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
}

#[test]
fn three_repeat_is_sortable_in_four() {
    let (pi, tau) = three_repeat_pair();
    assert!(decide(&pi, &tau).unwrap().is_yes());
    assert_eq!(pi.apply_reversal(3, 6).unwrap().bracketed("r0"), "[+r0,+r1,+1,+r2,-r1,-r3,-r2,-2,+r3,-r0]");
    let r = bfs_distance(&pi, &tau, DEFAULT_STATE_CAP).unwrap();
    assert_eq!(r.distance, Some(4));
    assert_eq!(bfs_distance(&tau, &pi, DEFAULT_STATE_CAP).unwrap().distance, Some(4));
    let t = sort_dp2(&pi, &tau).unwrap();
    assert_eq!(pi.replay(&t).unwrap(), tau);
}

#[test]
fn small_graph_examples() {
    let g = build_ig_dp2(&c("+1 +2"), &c("+1 +2")).unwrap();
    assert!(g.is_empty());
    let pi = c("+a +b -a -b");
    let g = build_ig_dp2(&pi, &pi).unwrap();
    assert_eq!(g.edges(), vec![(0, 1)]);
}

#[test]
fn single_forced_reversal() {
    let (pi, tau) = (c("+a +1 -a"), c("+a -1 -a"));
    assert_eq!(sort_dp2(&pi, &tau).unwrap().steps, vec![(1, 3)]);
    assert_eq!(bfs_distance(&pi, &tau, 100).unwrap().distance, Some(1));
    let run = solve_balanced2(&pi, &tau).unwrap();
    assert_eq!(run.trace.len(), 1);
    assert_eq!(pi.replay(&run.trace).unwrap(), tau);
    let dirs: Vec<String> =
        assign_directions(&pi, &tau).unwrap().iter().map(|d| d.direction.to_string()).collect();
    assert_eq!(dirs.concat(), "+--+");
    let dec = decompose_segments(&assign_directions(&pi, &tau).unwrap());
    assert_eq!((dec.n_mps(), dec.n_mns()), (2, 1));
    assert_eq!(dec.boundaries, vec![1, 3]);
    assert_eq!(balanced_distance(&pi, &tau).unwrap(), 1);
}

#[test]
fn identity_cases() {
    let (pi, _) = three_repeat_pair();
    assert!(sort(&pi, &pi).unwrap().is_empty());
    assert!(sort_general(&pi, &pi).unwrap().is_empty());
    let b = c("+a +1 -a +b +2 -b");
    assert!(solve_balanced2(&b, &b).unwrap().trace.is_empty());
    let f = build_bijection(&pi, &pi).unwrap();
    let acg = build_acg(&pi, &pi, &f).unwrap();
    assert!(acg.all_trivial());
    let ig = build_ig_general(&acg);
    assert!(ig.marked.iter().all(|m| !m));
}

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symrev::gen::{random_pair, random_reversal};
use symrev::general::sort_general_limited;
use symrev::*;

fn c(s: &str) -> Chromosome {
    Chromosome::parse(s).unwrap()
}

#[test]
fn fixed_bijection_rule_depends_on_matching() {
    // The flip of π is reachable in one step, yet the plain rule under the
    // left-to-right matching finds a stranded vertex.
    let pi = c("+r2 -r1 -r1 -r1 +r2");
    let tau = pi.flipped();
    let f = build_bijection(&pi, &tau).unwrap();
    assert!(!decide_fixed_bijection(&pi, &tau, &f).unwrap().is_yes());
    assert!(decide_with_bijection(&pi, &tau, &f).unwrap().is_yes());
    assert!(decide_general(&pi, &tau).unwrap().is_yes());
    assert_eq!(bfs_distance(&pi, &tau, 1000).unwrap().distance, Some(1));
}

#[test]
fn identical_pair_with_unlucky_matching() {
    let pi = c("-r1 +r2 +r1 +r2 +r2 -r1 -r3 -r3 -r3");
    let mut r = ChaCha8Rng::seed_from_u64(0);
    let mut unlucky = 0;
    for _ in 0..200 {
        let f = build_bijection_random(&pi, &pi, &mut r).unwrap();
        assert!(decide_with_bijection(&pi, &pi, &f).unwrap().is_yes());
        unlucky += usize::from(!decide_fixed_bijection(&pi, &pi, &f).unwrap().is_yes());
    }
    assert!(unlucky > 0);
}

#[test]
fn reversals_split_and_join_cycles() {
    let mut r = ChaCha8Rng::seed_from_u64(3);
    let (mut splits, mut joins) = (0, 0);
    for _ in 0..300 {
        let (pi, tau) = random_pair(&mut r, 2, 3, 3, false).unwrap();
        let f = build_bijection_random(&pi, &tau, &mut r).unwrap();
        let mut al = AlignedPair::new(&pi, &tau, &f).unwrap();
        for _ in 0..4 {
            let before = al.acg();
            let (i, j) = random_reversal(&mut r, &al.pi());
            if i == 0 {
                continue;
            }
            let cyc =
                |g: &AcgGraph, o: usize| g.cycles.iter().position(|c| c.occurrences.contains(&o)).unwrap();
            let (ci, cj) = (cyc(&before, i), cyc(&before, j));
            let (li, lj) = (before.cycles[ci].len(), before.cycles[cj].len());
            al.reverse(i, j).unwrap();
            let after = al.acg();
            after.verify().unwrap();
            let (ai, aj) = (cyc(&after, i), cyc(&after, j));
            if ci == cj {
                let opposite = before.blue_edges.iter().any(|e| e.opposite && e.a / 2 == i && e.b / 2 == j);
                if opposite {
                    splits += 1;
                    assert_ne!(ai, aj);
                    let mut got = [after.cycles[ai].len(), after.cycles[aj].len()];
                    got.sort_unstable();
                    assert_eq!(got, [1, li - 1]);
                }
            } else {
                joins += 1;
                assert_eq!(ai, aj);
                assert_eq!(after.cycles[ai].len(), li + lj);
            }
        }
    }
    assert!(splits > 20 && joins > 20, "splits {splits}, joins {joins}");
}

#[test]
fn dp2_inputs_agree_with_dp2_path() {
    let mut r = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..500 {
        let (pi, tau) = random_pair(&mut r, 2, 3, 2, false).unwrap();
        let f = build_bijection(&pi, &tau).unwrap();
        assert_eq!(
            decide_with_bijection(&pi, &tau, &f).unwrap().is_yes(),
            decide_dp2(&pi, &tau).unwrap().is_yes(),
            "{pi} -> {tau}"
        );
        if decide_dp2(&pi, &tau).unwrap().is_yes() {
            let a = sort_dp2(&pi, &tau).unwrap();
            let b = sort_general(&pi, &tau).unwrap();
            assert_eq!(pi.replay(&a).unwrap(), tau);
            assert_eq!(pi.replay(&b).unwrap(), tau);
        }
    }
}

#[test]
fn graph_sizes_stay_quadratic() {
    let mut r = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..50 {
        let (pi, tau) = random_pair(&mut r, 5, 10, 4, true).unwrap();
        let acg = build_acg(&pi, &tau, &build_bijection(&pi, &tau).unwrap()).unwrap();
        let ig = build_ig_general(&acg);
        let n = pi.len();
        assert!(ig.len() < 2 * n);
        assert!(ig.edge_count() <= 4 * n * n);
    }
}

#[test]
fn sorting_larger_instances() {
    let mut r = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..20 {
        let (pi, tau) = random_pair(&mut r, 20, 15, 4, true).unwrap();
        let t = sort_general(&pi, &tau).unwrap();
        assert_eq!(pi.replay(&t).unwrap(), tau);
    }
}

#[test]
fn sorter_refuses_no_instances_and_tiny_limits() {
    let pi = c("+r1 +1 +r2 +r1 +r2");
    let tau = c("+r1 +r2 +r1 +1 +r2");
    assert!(matches!(sort_general(&pi, &tau), Err(Error::NoInstance)));
    let pi = c("+a +1 -a +b +2 -b +a +3 -a");
    let tau = c("+a -1 -a +b -2 -b +a -3 -a");
    assert!(decide_general(&pi, &tau).unwrap().is_yes());
    assert!(sort_general_limited(&pi, &tau, 0).is_err());
    assert_eq!(pi.replay(&sort_general(&pi, &tau).unwrap()).unwrap(), tau);
}

#[test]
fn acg_dump_lists_cycles() {
    let pi = c("+a +1 +a +b -a +b");
    let tau = symrev::gen::all_trails(&pi).pop().unwrap();
    let acg = build_acg(&pi, &tau, &build_bijection(&pi, &tau).unwrap()).unwrap();
    let text = acg.dump();
    assert!(text.lines().count() >= acg.cycles.len());
}

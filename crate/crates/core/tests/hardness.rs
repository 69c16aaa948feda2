use symrev::hardness::{example_circle_graph, verify_correspondence, CorrespondenceStatus, SpawnKind};
use symrev::oracle::steiner::{connects, steiner_exact};
use symrev::{bfs_distance, sat_to_steiner, steiner_to_smsr, CircleGraphInstance, SatB2Instance};

#[test]
fn example_formula_is_satisfiable_and_witness_connects() {
    let sat = SatB2Instance::example();
    let g = sat_to_steiner(&sat).unwrap();
    let mut satisfying = 0;
    for bits in 0..(1u32 << sat.n) {
        let a: Vec<bool> = (0..sat.n).map(|i| bits >> i & 1 == 1).collect();
        let w = g.assignment_witness(&sat, &a).unwrap();
        assert_eq!(w.len(), 14 * sat.n);
        assert_eq!(connects(&g.base, &w), sat.satisfied_by(&a), "assignment {a:?}");
        satisfying += sat.satisfied_by(&a) as usize;
    }
    assert!(satisfying > 0);
}

#[test]
fn terminal_set_is_exactly_the_fixed_families() {
    let g = sat_to_steiner(&SatB2Instance::example()).unwrap();
    for (v, role) in g.roles.iter().enumerate() {
        assert_eq!(role.is_terminal(), g.base.is_terminal(v), "{}", g.base.names[v]);
    }
}

#[test]
fn single_variable_gadget_needs_fourteen() {
    let g = sat_to_steiner(&SatB2Instance::example()).unwrap();
    // x1 occurs positively in clauses 1, 2 and negatively in 3, 4.
    for clauses in [&[][..], &[1, 2], &[3, 4], &[1], &[4]] {
        let sub = g.restrict_to_variable(1, clauses).unwrap();
        assert_eq!(steiner_exact(&sub).unwrap().k, 14, "clauses {clauses:?}");
    }
    for clauses in [&[1, 3][..], &[2, 4], &[1, 2, 3, 4]] {
        let sub = g.restrict_to_variable(1, clauses).unwrap();
        assert!(steiner_exact(&sub).unwrap().k > 14, "clauses {clauses:?}");
    }
}

#[test]
fn malformed_formula_rejected() {
    assert!(SatB2Instance::new(3, vec![[1, 2, 3], [1, -2, -3], [1, -2, 3], [-1, 2, -3]]).is_err());
    let s = SatB2Instance::example();
    let mut bad = s.clauses.clone();
    bad[0][0] = -bad[0][0];
    assert!(SatB2Instance::new(s.n, bad).is_err());
}

#[test]
fn worked_steiner_example_matches_distance() {
    let g = example_circle_graph();
    let k = steiner_exact(&g).unwrap().k;
    let inst = steiner_to_smsr(&g, None).unwrap();
    assert_eq!(inst.pi.dp(), 2);
    assert_eq!(inst.terminal_count, 3);
    let r = verify_correspondence(&inst, &g, 5_000_000).unwrap();
    assert_eq!(r.status, CorrespondenceStatus::Pass, "{r}");
    assert_eq!(r.oracle, Some(2 * 3 + 2 * k + 1));
}

#[test]
fn single_isolated_terminal_costs_three() {
    let g = CircleGraphInstance::from_integers(&[("x", 1, 2)], &["x"]).unwrap();
    let inst = steiner_to_smsr(&g, None).unwrap();
    let r = bfs_distance(&inst.pi, &inst.tau, 1_000_000).unwrap();
    assert_eq!(r.distance, Some(3));
    assert_eq!(inst.log.len(), 1);
    assert_eq!(inst.log[0].kind, SpawnKind::ChosenTerminal);
}

#[test]
fn chosen_vertex_must_be_terminal() {
    let g = example_circle_graph();
    let u = g.index_of("u").unwrap();
    assert!(steiner_to_smsr(&g, Some(u)).is_err());
    let z = g.index_of("z").unwrap();
    let inst = steiner_to_smsr(&g, Some(z)).unwrap();
    assert_eq!(inst.chosen_terminal, z);
}

#[test]
fn every_chosen_terminal_gives_same_distance() {
    let g =
        CircleGraphInstance::from_integers(&[("a", 1, 4), ("s", 3, 7), ("b", 5, 9)], &["a", "b"]).unwrap();
    for &t in &g.terminals.clone() {
        let inst = steiner_to_smsr(&g, Some(t)).unwrap();
        let r = verify_correspondence(&inst, &g, 2_000_000).unwrap();
        assert_eq!(r.status, CorrespondenceStatus::Pass, "{r}");
        assert_eq!(r.oracle, Some(2 * 2 + 2 + 1));
    }
}

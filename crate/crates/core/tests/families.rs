use edgedom_core::enumerate::free_trees_up_to;
use edgedom_core::families::*;
use edgedom_core::*;
use proptest::prelude::*;

fn brute(g: &Graph) -> (ExtNat, ExtNat) {
    (
        brute_min_ed(g).unwrap().value,
        brute_min_ted(g).unwrap().value,
    )
}

#[test]
fn vertex_family_examples() {
    let p4 = init_family_t();
    assert_eq!(brute(p4.graph()), (ExtNat::from(1), ExtNat::from(2)));
    for v in [0, 3] {
        let p7 = apply_t_o1(&p4, v).unwrap();
        assert_eq!(p7.graph().max_degree(), 2);
        let (ed, ted) = brute(p7.graph());
        assert_eq!(ted, ed + ed);
        assert_eq!(ExtNat::from_usize(cc_edge_set(&p7).unwrap().len()), ed);
    }
    let five = apply_t_o2(&p4, 1).unwrap();
    let (ed, ted) = brute(five.graph());
    assert_eq!((ed, ted), (ExtNat::from(1), ExtNat::from(2)));
    assert_eq!(cc_edge_set(&five).unwrap(), cc_edge_set(&p4).unwrap());

    let mut ds = p4.clone();
    for v in [1, 1, 2, 2, 2] {
        ds = apply_t_o2(&ds, v).unwrap();
    }
    let r = check_ratio(ds.graph()).unwrap();
    assert!(r.double_star && r.holds(Ratio::Double));
    assert!(apply_t_o2(&p4, 3).is_err());
}

#[test]
fn edge_family_examples() {
    let p5 = init_family_tt(&Graph::path(5)).unwrap();
    assert_eq!(brute(p5.graph()), (ExtNat::from(2), ExtNat::from(2)));
    assert_eq!(s_edge_set(&p5).unwrap().len(), 2);

    let pendant = apply_tt_o1(&p5, 2).unwrap();
    assert_eq!(pendant.labels().last(), Some(&ELabel::L2));
    let (ed, ted) = brute(pendant.graph());
    assert_eq!(ed, ted);

    for v in 0..5 {
        let t = apply_tt_o5(&p5, v).unwrap();
        assert_eq!(t.graph().vertex_count(), 10);
        let (ed, ted) = brute(t.graph());
        assert_eq!((ed, ted), (ExtNat::from(4), ExtNat::from(4)));
        assert_eq!(s_edge_set(&t).unwrap().len(), 4);
    }
    for v in 0..5 {
        assert!(apply_tt_o4(&p5, v).is_err());
    }

    let spider = init_family_tt(&diameter_four_shape(&[1, 1, 1], 0).unwrap()).unwrap();
    let s = s_edge_set(&spider).unwrap();
    assert_eq!(ExtNat::from_usize(s.len()), brute(spider.graph()).1);
    assert!(s.iter().all(|e| !spider.graph().is_leaf_edge(e)));
}

#[test]
fn complete_and_sound_up_to_ten_vertices() {
    for kind in [FamilyKind::T, FamilyKind::Tt] {
        let r = completeness(kind, 10, Readings::default());
        assert!(r.targets > 0);
        assert!(
            r.is_exact(),
            "{kind:?}: {} missing, {} unsound",
            r.missing.len(),
            r.unsound.len()
        );
    }
}

#[test]
fn leaf_reading_is_decided_by_soundness() {
    let any = Readings {
        leaf: LeafReading::AnyLeaf,
        ..Readings::default()
    };
    let loose = completeness(FamilyKind::T, 11, any);
    assert!(loose.missing.is_empty());
    assert!(!loose.unsound.is_empty());
    assert!(completeness(FamilyKind::T, 12, Readings::default()).is_exact());
}

#[test]
fn guard_readings_agree() {
    let either = Readings {
        guard: GuardReading::EitherEnd,
        ..Readings::default()
    };
    let a = reachable(FamilyKind::Tt, 12, Readings::default());
    let b = reachable(FamilyKind::Tt, 12, either);
    assert_eq!((a.states, &a.shapes), (b.states, &b.shapes));
}

#[test]
fn diameter_corollaries() {
    for g in free_trees_up_to(11) {
        let d = diameter(&g).unwrap();
        if d < 4 {
            continue;
        }
        let r = check_ratio(&g).unwrap();
        match d {
            4 => assert_eq!(r.gamma_t, r.gamma),
            5 => assert!(r.gamma_t == r.gamma || r.gamma_t == r.gamma + ExtNat::from(1)),
            _ => {}
        }
        assert!(exists_min_set_avoiding_leaf_edges(&g, false).unwrap());
        assert!(exists_min_set_avoiding_leaf_edges(&g, true).unwrap());
    }
}

#[test]
fn minimum_set_shapes_on_small_trees() {
    let cfg = OracleConfig::default();
    let (mut double, mut equal) = (0, 0);
    for g in free_trees_up_to(10) {
        let r = check_ratio(&g).unwrap();
        if r.holds(Ratio::Double) {
            double += 1;
            let (_, sets) = enumerate_min_sets(&g, false, &cfg).unwrap();
            for f in sets {
                assert!(
                    check_min_set_structure(&g, &f, MinSetProperty::DisjointNeighborhoods).unwrap()
                );
            }
        } else if r.holds(Ratio::Equal) {
            equal += 1;
            let (_, sets) = enumerate_min_sets(&g, true, &cfg).unwrap();
            for f in sets {
                assert!(check_min_set_structure(&g, &f, MinSetProperty::NontrivialStars).unwrap());
            }
        }
    }
    assert!(double > 0 && equal > 0);
}

fn check_generated(gen: &Generation) -> Result<(), TestCaseError> {
    let g = gen.tree.graph();
    prop_assert!(gen.tree.satisfies_observations());
    let r = check_ratio(g).unwrap();
    match &gen.tree {
        LabelledTree::Vertex(t) => {
            prop_assert!(r.holds(Ratio::Double));
            let u = cc_edge_set(t).unwrap();
            prop_assert_eq!(ExtNat::from_usize(u.len()), r.gamma);
            prop_assert!(
                check_min_set_structure(g, &u, MinSetProperty::DisjointNeighborhoods).unwrap()
            );
        }
        LabelledTree::Edge(t) => {
            prop_assert!(r.holds(Ratio::Equal));
            let d = s_edge_set(t).unwrap();
            prop_assert_eq!(ExtNat::from_usize(d.len()), r.gamma_t);
            prop_assert!(check_min_set_structure(g, &d, MinSetProperty::NontrivialStars).unwrap());
        }
    }
    Ok(())
}

proptest! {
    #[test]
    fn generated_vertex_trees_are_sound(seed in any::<u64>(), budget in 0usize..=20) {
        check_generated(&generate(FamilyKind::T, seed, budget))?;
    }

    #[test]
    fn generated_edge_trees_are_sound(seed in any::<u64>(), budget in 0usize..=20) {
        check_generated(&generate(FamilyKind::Tt, seed, budget))?;
    }

    #[test]
    fn every_step_keeps_observations(seed in any::<u64>(), budget in 1usize..=12) {
        for kind in [FamilyKind::T, FamilyKind::Tt] {
            let gen = generate(kind, seed, budget);
            let mut t = gen.start.clone();
            for &s in &gen.steps {
                t = t.apply(s).unwrap();
                prop_assert!(t.satisfies_observations());
            }
            prop_assert_eq!(t, gen.tree);
        }
    }
}

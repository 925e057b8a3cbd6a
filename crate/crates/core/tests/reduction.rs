use edgedom_core::brute::{constrained_min, enumerate_min_sets, OracleConfig};
use edgedom_core::reduction::gadget::{
    H_ATTACH, H_EDGES, H_PATTERN_ATTACHED, H_PATTERN_NONE, H_VERTICES,
};
use edgedom_core::reduction::*;
use edgedom_core::*;

fn one_var() -> Sat3Instance {
    Sat3Instance::from_dimacs(1, &[&[1], &[1, -1]])
}

fn two_var() -> Sat3Instance {
    Sat3Instance::from_dimacs(2, &[&[1, -2], &[1, 2], &[-1, 2]])
}

fn wide() -> Sat3Instance {
    Sat3Instance::from_dimacs(3, &[&[1, 2, 3], &[1, -2], &[2, -3], &[3, -1]])
}

fn big_cfg() -> OracleConfig {
    OracleConfig::with_cap(128)
}

#[test]
fn one_variable_sizes() {
    let out = build_reduction(&one_var()).unwrap();
    assert_eq!(out.graph.vertex_count(), 16);
    assert_eq!(out.graph.edge_count(), 16);
    assert_eq!(out.k, 6);
    let r = structural_report(&out.graph);
    assert!(r.bipartite);
    assert_eq!(r.max_degree, 3);
    // The clause (x1 ¬x1) closes a 6-cycle d2 b1_0 b1 c1 c1_0 dp2.
    assert_eq!(r.girth, ExtNat::from(6));
}

#[test]
fn structure_without_complementary_clauses() {
    let mut pool: Vec<Sat3Instance> = (1..=2).flat_map(enumerate_instances).collect();
    pool.push(wide());
    for inst in pool.iter().filter(|i| !i.has_complementary_clause()) {
        let out = build_reduction(inst).unwrap();
        let r = structural_report(&out.graph);
        assert!(r.bipartite, "{inst:?}");
        assert_eq!(r.max_degree, 3);
        assert!(r.girth >= ExtNat::from(10), "{inst:?} girth {}", r.girth);
    }
}

#[test]
fn homogeneous_clause_gets_gadget() {
    let out = build_reduction(&wide()).unwrap();
    assert_eq!(out.homogeneous_clauses, [0]);
    assert_eq!(out.k, 6 * 3 + 8);
    assert_eq!(out.graph.vertex_count(), 36 + H_VERTICES + 6);
    assert!(structural_report(&out.graph).bipartite);
    let neg = Sat3Instance::from_dimacs(3, &[&[-1, -2, -3], &[1, 2], &[1, 3], &[2, 3]]);
    let out = build_reduction(&neg).unwrap();
    assert_eq!(out.k, 26);
    assert_eq!(out.graph.max_degree(), 3);
}

#[test]
fn invalid_instance_rejected() {
    let bad = Sat3Instance::from_dimacs(1, &[&[1]]);
    assert!(matches!(build_reduction(&bad), Err(Error::InvalidInput(_))));
}

#[test]
fn encode_examples() {
    let out = build_reduction(&one_var()).unwrap();
    let f = encode_assignment(&out, &Assignment::new(vec![true])).unwrap();
    assert_eq!(f.len(), 6);
    assert!(is_total_edge_dominating(&out.graph, &f).unwrap());
    assert_eq!(
        decode_ted_set(&out, &f).unwrap(),
        Assignment::new(vec![true])
    );

    let out = build_reduction(&two_var()).unwrap();
    let a = Assignment::new(vec![true, true]);
    let f = encode_assignment(&out, &a).unwrap();
    assert_eq!(f.len(), 12);
    assert!(is_total_edge_dominating(&out.graph, &f).unwrap());
    assert!(decode_ted_set(&out, &f).unwrap().satisfies(&out.instance));

    let unsat = Assignment::new(vec![false, false]);
    assert!(matches!(
        encode_assignment(&out, &unsat),
        Err(Error::EncodingInfeasible(_))
    ));
}

#[test]
fn false_variable_uses_negated_literal_edge() {
    let inst = Sat3Instance::from_dimacs(2, &[&[-1, -2], &[1, 2], &[1, 2]]);
    let out = build_reduction(&inst).unwrap();
    let a = Assignment::new(vec![true, false]);
    assert!(a.satisfies(&out.instance));
    let f = encode_assignment(&out, &a).unwrap();
    let g = &out.vars[1];
    assert!(f.contains(out.graph.edge_between(g.a[0], g.a[1]).unwrap()));
    assert!(f.contains(out.graph.edge_between(g.b[0], g.b[1]).unwrap()));
    assert!(f.contains(out.occurrences[1].negative));
    assert!(!f.contains(out.graph.edge_between(g.c[0], g.c[1]).unwrap()));
}

#[test]
fn round_trip_on_all_small_instances() {
    let mut pool: Vec<Sat3Instance> = (1..=2).flat_map(enumerate_instances).collect();
    pool.push(wide());
    for inst in &pool {
        let out = build_reduction(inst).unwrap();
        let n = inst.num_vars;
        for bits in 0u32..(1 << n) {
            let a = Assignment::new((0..n).map(|i| bits >> i & 1 == 1).collect());
            match encode_assignment(&out, &a) {
                Ok(f) => {
                    assert!(a.satisfies(inst));
                    assert_eq!(f.len(), out.k);
                    assert!(is_total_edge_dominating(&out.graph, &f).unwrap());
                    assert_eq!(decode_ted_set(&out, &f).unwrap(), a);
                    assert_eq!(normalize_ted_set(&out, &f).unwrap(), f);
                }
                Err(_) => assert!(!a.satisfies(inst)),
            }
        }
    }
}

#[test]
fn minimum_sets_decode_to_satisfying_assignments() {
    let mut pool: Vec<Sat3Instance> = (1..=2).flat_map(enumerate_instances).collect();
    pool.push(wide());
    for inst in &pool {
        let out = build_reduction(inst).unwrap();
        let none = EdgeSet::new();
        let best = constrained_min(&out.graph, true, &none, &none, &big_cfg()).unwrap();
        let f = best.witness.unwrap();
        if f.len() <= out.k {
            assert!(decode_ted_set(&out, &f).unwrap().satisfies(inst));
        } else {
            assert!(matches!(
                decode_ted_set(&out, &f),
                Err(Error::InvalidCertificate(_))
            ));
        }
    }
}

#[test]
fn decode_rejects_bad_certificates() {
    let out = build_reduction(&one_var()).unwrap();
    let all = EdgeSet::from_ids(0..out.graph.edge_count());
    assert!(matches!(
        decode_ted_set(&out, &all),
        Err(Error::InvalidCertificate(_))
    ));
    let few = EdgeSet::from_ids([0]);
    assert!(matches!(
        decode_ted_set(&out, &few),
        Err(Error::InvalidCertificate(_))
    ));
}

#[test]
fn leaf_path_edges_in_every_minimum_set() {
    for inst in [one_var(), two_var()] {
        let out = build_reduction(&inst).unwrap();
        if !out.graph.is_connected() {
            continue;
        }
        let (_, sets) = enumerate_min_sets(&out.graph, true, &big_cfg()).unwrap();
        assert!(!sets.is_empty());
        for f in &sets {
            for g in &out.vars {
                for path in [g.a, g.b, g.c] {
                    assert!(f.contains(out.graph.edge_between(path[1], path[2]).unwrap()));
                }
            }
        }
    }
}

#[test]
fn equivalence_examples() {
    let r = reduction_equivalence_check(&one_var(), &big_cfg()).unwrap();
    assert_eq!(
        r,
        EquivalenceReport {
            satisfiable: true,
            gamma_t: ExtNat::from(6),
            k: 6,
            agree: true
        }
    );
    let r = reduction_equivalence_check(&two_var(), &big_cfg()).unwrap();
    assert_eq!(
        r,
        EquivalenceReport {
            satisfiable: true,
            gamma_t: ExtNat::from(12),
            k: 12,
            agree: true
        }
    );
    let unsat = Sat3Instance::from_dimacs(1, &[&[1], &[1], &[-1]]);
    let r = reduction_equivalence_check(&unsat, &big_cfg()).unwrap();
    assert!(!r.satisfiable);
    assert!(r.gamma_t > ExtNat::from(6));
    assert!(r.agree);
}

/// Fewest gadget edges that totally dominate every gadget edge, when the
/// attachment edges in `attached` are selected, by scanning all subsets.
fn gadget_cost(attached: &[usize]) -> u32 {
    let m = H_EDGES.len();
    let touches =
        |(a, b): (usize, usize), (c, d): (usize, usize)| a == c || a == d || b == c || b == d;
    let mut best = u32::MAX;
    for f in 0u32..(1 << m) {
        let ok = (0..m).all(|e| {
            let (u, v) = H_EDGES[e];
            (0..m).any(|x| x != e && f >> x & 1 == 1 && touches(H_EDGES[e], H_EDGES[x]))
                || attached
                    .iter()
                    .any(|&i| H_ATTACH[i] == u || H_ATTACH[i] == v)
        });
        if ok {
            best = best.min(f.count_ones());
        }
    }
    best
}

#[test]
fn gadget_contribution() {
    assert_eq!(gadget_cost(&[]), 9);
    for subset in [&[0][..], &[1], &[2], &[0, 1], &[0, 2], &[1, 2], &[0, 1, 2]] {
        assert_eq!(gadget_cost(subset), 8, "{subset:?}");
    }
    let h = Graph::from_edges(H_VERTICES, H_EDGES).unwrap();
    assert!(h.is_tree());
    assert_eq!(h.max_degree(), 3);
    assert_eq!(H_PATTERN_NONE.len(), 9);
    assert!(H_PATTERN_ATTACHED.iter().all(|p| p.len() == 8));
}

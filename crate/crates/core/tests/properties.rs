use proptest::prelude::*;

use sombor_core::closed_form::euler_phi;
use sombor_core::graph::{
    build_graph, generalized_join, is_isomorphic, parse_edgelist, super_graph, to_edgelist, GraphKind, JoinSkeleton, Part,
    Relation, SimpleGraph,
};
use sombor_core::group::{make_group, AUDIT_LIMIT, Family, GroupSpec, VertexPartition};
use sombor_core::spectral::{cluster_spectrum, eigen_sym, eval_poly, poly_from_roots, sombor_matrix, DEFAULT_EIGEN_TOL};
use sombor_core::verify::{round_json, run_task, Status, VerificationTask};

fn graph_strategy(max: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::empty(n);
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        g.add_edge(i, j);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn partition_strategy(n: usize) -> impl Strategy<Value = VertexPartition> {
    proptest::collection::vec(0..n.max(1), n).prop_map(move |keys| VertexPartition::from_key(n, |i| keys[i]))
}

fn cell_strategy() -> impl Strategy<Value = (Family, u32, GraphKind, Relation)> {
    (
        prop::sample::select(Family::ALL.to_vec()),
        1u32..=6,
        prop::sample::select(GraphKind::ALL.to_vec()),
        prop::sample::select(Relation::ALL.to_vec()),
    )
        .prop_map(|(f, n, k, r)| (f, n.max(f.min_n()), k, r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sombor_spectrum_identities(g in graph_strategy(14)) {
        let s = sombor_matrix(&g);
        let eigs = eigen_sym(&s, DEFAULT_EIGEN_TOL).unwrap();
        let scale = eigs.iter().fold(1.0f64, |m, x| m.max(x.abs()));
        prop_assert!(eigs.iter().sum::<f64>().abs() < 1e-9 * scale * g.vertex_count() as f64);
        let frob: f64 = g.edges().iter().map(|&(u, v)| {
            let (a, b) = (g.degree(u) as f64, g.degree(v) as f64);
            2.0 * (a * a + b * b)
        }).sum();
        let sq: f64 = eigs.iter().map(|x| x * x).sum();
        prop_assert!((sq - frob).abs() <= 1e-9 * frob.max(1.0));
        let c = cluster_spectrum(&eigs, 1e-6 * scale);
        prop_assert_eq!(c.pairs.iter().map(|p| p.multiplicity).sum::<usize>(), g.vertex_count());
    }

    #[test]
    fn super_graph_laws(g in graph_strategy(10), seed in any::<u64>()) {
        let n = g.vertex_count();
        let keys: Vec<u64> = (0..n as u64).map(|i| (i.wrapping_mul(seed | 1) >> 7) % 3).collect();
        let p = VertexPartition::from_key(n, |i| keys[i]);
        let sup = super_graph(&g, &p).unwrap();
        prop_assert!(g.is_spanning_subgraph_of(&sup));
        for class in p.classes() {
            prop_assert!(sup.is_clique(class));
            let d = sup.degree(class[0]);
            prop_assert!(class.iter().all(|&v| sup.degree(v) == d));
        }
        let again = super_graph(&sup, &p).unwrap();
        prop_assert_eq!(again.edges(), sup.edges());
        prop_assert_eq!(super_graph(&g, &VertexPartition::singletons(n)).unwrap().edges(), g.edges());
    }

    #[test]
    fn join_sizes(skel in graph_strategy(6), sizes in proptest::collection::vec((1usize..5, any::<bool>()), 6)) {
        let k = skel.vertex_count();
        let parts: Vec<Part> = sizes[..k].iter().map(|&(m, full)| if full { Part::Complete(m) } else { Part::Empty(m) }).collect();
        let g = generalized_join(&JoinSkeleton::new(skel.clone(), parts.clone()).unwrap());
        prop_assert_eq!(g.vertex_count(), parts.iter().map(|p| p.size()).sum::<usize>());
        let inner: usize = parts.iter().map(|p| match p { Part::Complete(m) => m * (m - 1) / 2, Part::Empty(_) => 0 }).sum();
        let cross: usize = skel.edges().iter().map(|&(a, b)| parts[a].size() * parts[b].size()).sum();
        prop_assert_eq!(g.edge_count(), inner + cross);
    }

    #[test]
    fn isomorphism_survives_relabelling(g in graph_strategy(12), perm_seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = SimpleGraph::from_edges(n, &g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect::<Vec<_>>());
        prop_assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn edgelist_round_trip(g in graph_strategy(12)) {
        let back = parse_edgelist(&to_edgelist(&g)).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
    }

    #[test]
    fn partitions_are_well_formed(p in (1usize..20).prop_flat_map(partition_strategy)) {
        let total: usize = p.classes().iter().map(|c| c.len()).sum();
        prop_assert_eq!(total, p.len());
        prop_assert!(p.refines(&VertexPartition::whole(p.len())));
        prop_assert!(VertexPartition::singletons(p.len()).refines(&p));
    }

    #[test]
    fn groups_satisfy_their_axioms(family in prop::sample::select(Family::ALL.to_vec()), n in 1u32..12) {
        let n = n.max(family.min_n());
        let g = make_group(GroupSpec::new(family, n).unwrap()).unwrap();
        if g.order() <= AUDIT_LIMIT {
            prop_assert!(g.audit_axioms().is_ok());
        }
        let order = g.order() as u32;
        prop_assert!(g.orders().iter().all(|o| order.is_multiple_of(*o)));
        prop_assert!(g.conjugacy_partition().classes().iter().all(|c| (order as usize).is_multiple_of(c.len())));
        prop_assert!(g.conjugacy_partition().refines(&g.order_partition()));
        // rotations of each order d form a class of size phi(d) in the cyclic part
        let m = g.rotation_order() as u64;
        let per_order = (1..=m).filter(|d| m.is_multiple_of(*d)).map(euler_phi).sum::<u64>();
        prop_assert_eq!(per_order, m);
    }

    #[test]
    fn graphs_nest_and_connect((family, n, _, relation) in cell_strategy()) {
        let g = make_group(GroupSpec::new(family, n).unwrap()).unwrap();
        let p = build_graph(&g, GraphKind::Power, relation).unwrap();
        let e = build_graph(&g, GraphKind::Enhanced, relation).unwrap();
        let c = build_graph(&g, GraphKind::Commuting, relation).unwrap();
        prop_assert!(p.is_spanning_subgraph_of(&e) && e.is_spanning_subgraph_of(&c));
        prop_assert!(p.is_connected());
    }

    #[test]
    fn reports_are_deterministic_and_never_pass_short((family, n, kind, relation) in cell_strategy()) {
        let t = VerificationTask::new(family, kind, relation, n);
        let a = run_task(&t).unwrap();
        let b = run_task(&t).unwrap();
        prop_assert_eq!(&a, &b);
        if a.status == Status::Pass {
            prop_assert!(a.claims.iter().all(|c| c.measured_multiplicity >= c.claim.multiplicity));
        }
    }

    #[test]
    fn roots_annihilate_their_polynomial(roots in proptest::collection::vec(-20.0f64..20.0, 1..8)) {
        let p = poly_from_roots(&roots);
        prop_assert_eq!(p.len(), roots.len() + 1);
        let scale: f64 = roots.iter().map(|r| 1.0 + r.abs()).product();
        for r in &roots {
            prop_assert!(eval_poly(&p, *r).abs() <= 1e-9 * scale);
        }
    }

    #[test]
    fn json_rounding_is_idempotent(xs in proptest::collection::vec(-1e6f64..1e6, 0..10)) {
        let mut v = serde_json::json!(xs);
        round_json(&mut v);
        let once = v.clone();
        round_json(&mut v);
        prop_assert_eq!(once, v);
    }
}

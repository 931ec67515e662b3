use proptest::prelude::*;

use matchcert::oracle::odd_components_after_deleting;
use matchcert::represent::represents_per_component;
use matchcert::{
    certify, choose_representatives, connected_components, is_alternating, is_cycles_graph,
    is_tutte_violator, matching_symm_diff, odd_component_count, reachable, represents,
    symm_diff_augment, verify_certificate, Certificate, Graph, Oracle, PerfectMatching, Subgraph,
    VertexSet,
};

fn graph_on(n: usize, bits: &[bool]) -> Graph {
    let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    Graph::new(n, pairs.zip(bits).filter(|(_, &b)| b).map(|(p, _)| p)).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_on(n, &bits))
    })
}

fn arb_graphs_same_n(max_n: usize, count: usize) -> impl Strategy<Value = Vec<Graph>> {
    (1..=max_n).prop_flat_map(move |n| {
        let slots = n * (n - 1) / 2;
        prop::collection::vec(prop::collection::vec(any::<bool>(), slots), count)
            .prop_map(move |all| all.iter().map(|bits| graph_on(n, bits)).collect())
    })
}

fn arb_graph_with_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let full = g.vertices().bits();
        (
            Just(g),
            any::<u64>().prop_map(move |b| VertexSet::from_bits(b & full)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn symm_diff_laws(gs in arb_graphs_same_n(10, 3)) {
        let (a, b, c) = (&gs[0], &gs[1], &gs[2]);
        let empty = Graph::empty(a.vertex_count()).unwrap();
        prop_assert_eq!(a.symm_diff(a).unwrap(), empty.clone());
        prop_assert_eq!(a.symm_diff(&empty).unwrap(), a.clone());
        prop_assert_eq!(a.symm_diff(b).unwrap(), b.symm_diff(a).unwrap());
        prop_assert_eq!(
            a.symm_diff(b).unwrap().symm_diff(c).unwrap(),
            a.symm_diff(&b.symm_diff(c).unwrap()).unwrap()
        );
    }

    #[test]
    fn add_edge_only_grows(g in arb_graph(10), u in 0usize..10, v in 0usize..10) {
        prop_assume!(u != v && u < g.vertex_count() && v < g.vertex_count());
        let bigger = g.add_edge(u, v).unwrap();
        prop_assert!(g.is_subgraph_of(&bigger).unwrap());
        prop_assert!(bigger.adjacent(u, v));
    }

    #[test]
    fn deleted_vertices_lose_all_edges((g, u) in arb_graph_with_set(10)) {
        let spanning = g.delete_verts(u).spanning_coe();
        for v in u {
            prop_assert_eq!(spanning.degree(v), 0);
        }
        prop_assert!(spanning.is_subgraph_of(&g).unwrap());
    }

    #[test]
    fn coe_agrees_with_spanning_coe((g, u) in arb_graph_with_set(10)) {
        let sub = g.delete_verts(u);
        let (local, map) = sub.coe();
        let relabeled: Vec<_> = local
            .edges()
            .into_iter()
            .map(|e| matchcert::Edge::new(map[e.lo()], map[e.hi()]).unwrap())
            .collect();
        let mut relabeled = relabeled;
        relabeled.sort();
        prop_assert_eq!(relabeled, sub.spanning_coe().edges());
        prop_assert_eq!(map, sub.verts().to_vec());
    }

    #[test]
    fn odd_vertex_count_iff_odd_number_of_odd_components(
        (g, u) in arb_graph_with_set(10),
        keep in prop::collection::vec(any::<bool>(), 45),
    ) {
        // an arbitrary subgraph: some vertices removed, then some edges dropped
        let base = g.delete_verts(u);
        let edges: Vec<_> = base.edges().into_iter().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| e).collect();
        let sub = Subgraph::new(&g, base.verts(), edges).unwrap();
        prop_assert_eq!(sub.verts().len() % 2, odd_component_count(&sub) % 2);
    }

    #[test]
    fn reachability_is_an_equivalence(
        (g, u) in arb_graph_with_set(10),
        picks in prop::collection::vec(0usize..10, 3),
    ) {
        let sub = g.delete_verts(u);
        let verts = sub.verts().to_vec();
        prop_assume!(!verts.is_empty());
        let [a, b, c] = [0, 1, 2].map(|i| verts[picks[i] % verts.len()]);
        prop_assert!(reachable(&sub, a, a).unwrap());
        prop_assert_eq!(reachable(&sub, a, b).unwrap(), reachable(&sub, b, a).unwrap());
        if reachable(&sub, a, b).unwrap() && reachable(&sub, b, c).unwrap() {
            prop_assert!(reachable(&sub, a, c).unwrap());
        }
    }

    #[test]
    fn components_are_connected_and_maximal((g, u) in arb_graph_with_set(10)) {
        let sub = g.delete_verts(u);
        let p = connected_components(&sub);
        prop_assert_eq!(p.vertices(), sub.verts());
        let total: usize = p.components().iter().map(|c| c.len()).sum();
        prop_assert_eq!(total, sub.verts().len());
        for &comp in p.components() {
            let root = comp.first().unwrap();
            for v in sub.verts() {
                prop_assert_eq!(reachable(&sub, root, v).unwrap(), comp.contains(v));
            }
        }
        let mins: Vec<_> = p.components().iter().map(|c| c.first().unwrap()).collect();
        prop_assert!(mins.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn component_routes_agree((g, u) in arb_graph_with_set(12)) {
        prop_assert_eq!(
            odd_component_count(&g.delete_verts(u)),
            odd_components_after_deleting(&g, u)
        );
    }

    #[test]
    fn chosen_representatives_represent(
        (g, u) in arb_graph_with_set(12),
        pick in any::<u64>(),
    ) {
        let p = connected_components(&g.delete_verts(u));
        let chosen: Vec<usize> = (0..p.len()).filter(|&c| pick >> c & 1 == 1).collect();
        let reps = choose_representatives(&chosen, &p);
        prop_assert!(represents(reps, &chosen, &p));
        prop_assert!(represents_per_component(reps, &chosen, &p));
    }

    #[test]
    fn representation_formulations_agree(
        (g, u) in arb_graph_with_set(10),
        reps in any::<u64>(),
        pick in any::<u64>(),
    ) {
        let sub = g.delete_verts(u);
        let p = connected_components(&sub);
        let reps = VertexSet::from_bits(reps & sub.verts().bits());
        let chosen: Vec<usize> = (0..p.len()).filter(|&c| pick >> c & 1 == 1).collect();
        prop_assert_eq!(
            represents(reps, &chosen, &p),
            represents_per_component(reps, &chosen, &p)
        );
    }

    #[test]
    fn certificates_verify_and_agree_with_oracle(g in arb_graph(12)) {
        let cert = certify(&g);
        prop_assert!(verify_certificate(&g, &cert));
        let oracle = Oracle::default();
        let has_pm = oracle.perfect_matching(&g).unwrap().is_some();
        prop_assert_eq!(cert.is_perfect_matching(), has_pm);
        if has_pm {
            prop_assert!(oracle.count_perfect_matchings(&g).unwrap() >= 1);
        } else {
            prop_assert!(oracle.violator(&g).unwrap().is_some());
        }
    }

    #[test]
    fn violators_lift_through_edge_addition(
        (g, u) in arb_graph_with_set(12),
        a in 0usize..12,
        b in 0usize..12,
    ) {
        prop_assume!(a != b && a < g.vertex_count() && b < g.vertex_count());
        let bigger = g.add_edge(a, b).unwrap();
        if is_tutte_violator(&bigger, u) {
            prop_assert!(is_tutte_violator(&g, u));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn perfect_matching_pairs_flip_into_each_other(g in arb_graph(8)) {
        let all = Oracle::default().all_perfect_matchings(&g).unwrap();
        let pms: Vec<_> = all.into_iter().map(|m| PerfectMatching::new(&g, m).unwrap()).collect();
        for m in &pms {
            for other in &pms {
                let d = matching_symm_diff(m.matching(), other.matching()).unwrap();
                prop_assert!(is_cycles_graph(&d));
                prop_assert!(is_alternating(&d, &m.spanning_graph()).unwrap());
                prop_assert!(is_alternating(&d, &other.spanning_graph()).unwrap());
                let flipped = symm_diff_augment(m, &d).unwrap();
                prop_assert_eq!(&flipped, other);
                prop_assert_eq!(&symm_diff_augment(&flipped, &d).unwrap(), m);
            }
        }
    }

    #[test]
    fn graphs_with_matchings_have_no_violator(g in arb_graph(8)) {
        if Oracle::default().perfect_matching(&g).unwrap().is_some() {
            for bits in 0..1u64 << g.vertex_count() {
                prop_assert!(!is_tutte_violator(&g, VertexSet::from_bits(bits)));
            }
            prop_assert!(matches!(certify(&g), Certificate::PerfectMatching(_)));
        }
    }
}

#[test]
fn exhaustive_small_graphs() {
    // every labeled graph on up to 6 vertices
    let oracle = Oracle::default();
    for n in 0..=6usize {
        let slots = n * n.saturating_sub(1) / 2;
        for mask in 0..1u64 << slots {
            let bits: Vec<bool> = (0..slots).map(|k| mask >> k & 1 == 1).collect();
            let g = graph_on(n, &bits);
            let cert = certify(&g);
            assert!(verify_certificate(&g, &cert), "{g:?}");
            assert_eq!(
                cert.is_perfect_matching(),
                oracle.perfect_matching(&g).unwrap().is_some(),
                "{g:?}"
            );
            assert_eq!(
                g.vertices().len() % 2,
                odd_component_count(&Subgraph::top(&g)) % 2
            );
        }
    }
}

#[test]
fn sampled_eight_vertex_graphs() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
    let oracle = Oracle::default();
    for _ in 0..2_000 {
        let p = rng.gen_range(0.2..0.8);
        let g = matchcert::sweep::random_graph(&mut rng, 8, p);
        let cert = certify(&g);
        assert!(verify_certificate(&g, &cert), "{g:?}");
        let has_pm = oracle.perfect_matching(&g).unwrap().is_some();
        assert_eq!(cert.is_perfect_matching(), has_pm, "{g:?}");
        let violators = (0..1u64 << 8)
            .filter(|&bits| is_tutte_violator(&g, VertexSet::from_bits(bits)))
            .count();
        assert_eq!(has_pm, violators == 0, "{g:?}");
    }
}

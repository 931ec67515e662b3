//! Worked examples whose expected values come from the brute-force oracle.

use matchcert::oracle::odd_components_after_deleting;
use matchcert::sweep::petersen;
use matchcert::{
    certify, clique_components_matching, combine_near_matchings, find_non_clique_witness,
    is_tutte_violator, matching_symm_diff, symm_diff_augment, verify_perfect_matching, Certificate,
    CombineBranch, Graph, Matching, NearMatchingWitness, Oracle, PerfectMatching, VertexSet,
};

fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

fn pairs(m: &Matching) -> Vec<(usize, usize)> {
    m.edges().into_iter().map(|e| (e.lo(), e.hi())).collect()
}

#[test]
fn cycle_matchings_differ_by_the_cycle() {
    for n in [4, 6] {
        let c = cycle(n);
        let all = Oracle::default().all_perfect_matchings(&c).unwrap();
        assert_eq!(all.len(), 2);
        let d = matching_symm_diff(&all[0], &all[1]).unwrap();
        assert_eq!(d, c);
        let first = PerfectMatching::new(&c, all[0].clone()).unwrap();
        let flipped = symm_diff_augment(&first, &c).unwrap();
        assert_eq!(flipped.matching(), &all[1]);
    }
    let c4 = Oracle::default().all_perfect_matchings(&cycle(4)).unwrap();
    assert_eq!(pairs(&c4[0]), vec![(0, 1), (2, 3)]);
    assert_eq!(pairs(&c4[1]), vec![(0, 3), (1, 2)]);
    let c6 = Oracle::default().all_perfect_matchings(&cycle(6)).unwrap();
    assert_eq!(pairs(&c6[0]), vec![(0, 1), (2, 3), (4, 5)]);
    assert_eq!(pairs(&c6[1]), vec![(0, 5), (1, 2), (3, 4)]);
}

#[test]
fn k4_pairings() {
    let k4 = Graph::complete(4).unwrap();
    let all = Oracle::default().all_perfect_matchings(&k4).unwrap();
    let mut found: Vec<_> = all.iter().map(pairs).collect();
    found.sort();
    // the three ways to split {0,1,2,3} into two pairs
    assert_eq!(
        found,
        vec![
            vec![(0, 1), (2, 3)],
            vec![(0, 2), (1, 3)],
            vec![(0, 3), (1, 2)]
        ]
    );
}

#[test]
fn claw() {
    let claw = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    let centre: VertexSet = [0].into_iter().collect();
    assert_eq!(odd_components_after_deleting(&claw, centre), 3);
    assert!(is_tutte_violator(&claw, centre));
    let oracle = Oracle::default();
    assert_eq!(oracle.perfect_matching(&claw).unwrap(), None);
    assert_eq!(oracle.violator(&claw).unwrap(), Some(centre));
    assert_eq!(certify(&claw), Certificate::TutteViolator(centre));
}

#[test]
fn petersen_has_a_perfect_matching() {
    let p = petersen();
    assert!(Oracle::default().perfect_matching(&p).unwrap().is_some());
    match certify(&p) {
        Certificate::PerfectMatching(m) => assert!(verify_perfect_matching(&p, &m)),
        other => panic!("expected a matching, got {other:?}"),
    }
}

#[test]
fn two_hub_clique_instance() {
    let mut edges = vec![(0, 1), (2, 3), (2, 4), (3, 4)];
    for hub in [0, 1] {
        edges.extend((2..6).map(|v| (hub, v)));
    }
    let g = Graph::new(6, edges).unwrap();
    assert!(Oracle::default().perfect_matching(&g).unwrap().is_some());
    let pm = clique_components_matching(&g).unwrap();
    assert_eq!(pairs(pm.matching()), vec![(0, 2), (1, 5), (3, 4)]);
}

#[test]
fn witness_clauses_on_path_and_square() {
    for g in [Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap(), cycle(4)] {
        let w = find_non_clique_witness(&g).unwrap();
        assert_eq!(
            w,
            NearMatchingWitness {
                x: 0,
                a: 1,
                b: 2,
                c: 3
            }
        );
        assert!(g.adjacent(w.x, w.a) && g.adjacent(w.a, w.b));
        assert!(!g.adjacent(w.x, w.b) && !g.adjacent(w.a, w.c));
        assert!(w.x != w.b && w.x != w.c && w.a != w.c && w.b != w.c);
    }
}

/// Every pair of near matchings of the path 0-1-2-3 combines into its unique
/// perfect matching.
#[test]
fn path_near_matchings_combine() {
    let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let w = find_non_clique_witness(&p4).unwrap();
    let g1 = p4.add_edge(w.x, w.b).unwrap();
    let g2 = p4.add_edge(w.a, w.c).unwrap();
    let oracle = Oracle::default();
    let firsts = oracle.all_perfect_matchings(&g1).unwrap();
    let seconds = oracle.all_perfect_matchings(&g2).unwrap();
    let expected = oracle.perfect_matching(&p4).unwrap().unwrap();
    for m1 in &firsts {
        for m2 in &seconds {
            let m1 = PerfectMatching::new(&g1, m1.clone()).unwrap();
            let m2 = PerfectMatching::new(&g2, m2.clone()).unwrap();
            let (pm, branch) = combine_near_matchings(&p4, &w, &m1, &m2).unwrap();
            assert_eq!(pm.matching(), &expected);
            assert_eq!(branch, CombineBranch::FirstAvoidsExtraEdge);
        }
    }
}

/// Exhaustive over small graphs: every pair of near matchings combines, and
/// the five branches all occur.
#[test]
fn near_matchings_combine_everywhere() {
    let oracle = Oracle::default();
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0..1u64 << 15 {
        let g = matchcert::sweep::graph_from_mask(6, mask);
        let Some(w) = find_non_clique_witness(&g) else {
            continue;
        };
        let g1 = g.add_edge(w.x, w.b).unwrap();
        let g2 = g.add_edge(w.a, w.c).unwrap();
        let firsts = oracle.all_perfect_matchings(&g1).unwrap();
        let seconds = oracle.all_perfect_matchings(&g2).unwrap();
        for m1 in &firsts {
            for m2 in &seconds {
                let m1 = PerfectMatching::new(&g1, m1.clone()).unwrap();
                let m2 = PerfectMatching::new(&g2, m2.clone()).unwrap();
                let (pm, branch) = combine_near_matchings(&g, &w, &m1, &m2).unwrap();
                assert!(verify_perfect_matching(&g, pm.matching()));
                seen.insert(branch);
            }
        }
    }
    // the disjoint-cycle branch needs two alternating cycles of length >= 4,
    // so it first appears on 8 vertices (see the recorded fixtures)
    let mut expected: std::collections::BTreeSet<_> = CombineBranch::ALL.into_iter().collect();
    expected.remove(&CombineBranch::DisjointCycle);
    assert_eq!(seen, expected);
}

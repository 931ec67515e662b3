//! Randomized and exhaustive checks of the certifier against the oracle.
//!
//! Each `check_*` function runs one acceptance criterion and returns a
//! [`CriterionReport`]. The acceptance test target runs them at full scale;
//! the CLI `selftest` runs them with a configurable corpus.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexSet};
use crate::io::graph6::{emit_graph6, parse_graph6};
use crate::matching::{
    is_alternating, is_cycles_graph, matching_symm_diff, symm_diff_augment,
    verify_perfect_matching, Matching, PerfectMatching,
};
use crate::oracle::{Oracle, OracleLimits};
use crate::tutte::{
    clique_components_matching, combine_near_matchings, find_non_clique_witness, is_tutte_violator,
    verify_certificate, Certificate, Certifier, CombineBranch, NearMatchingWitness,
};
use crate::walk::odd_component_count;

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub checked: usize,
    pub detail: String,
    pub elapsed: Duration,
}

impl std::fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {}. {} ({} checked, {:.2?}){}{}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checked,
            self.elapsed,
            if self.detail.is_empty() { "" } else { ": " },
            self.detail
        )
    }
}

/// Which graphs the dichotomy sweeps visit.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Every labeled graph on `0..=exhaustive_max_n` vertices.
    pub exhaustive_max_n: usize,
    /// Vertex counts sampled uniformly over labeled graphs.
    pub sampled_ns: Vec<usize>,
    pub samples_per_n: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            exhaustive_max_n: 5,
            sampled_ns: vec![6, 7],
            samples_per_n: 50_000,
            seed: 0x7e77e,
        }
    }
}

impl SweepConfig {
    pub fn max_n(&self) -> usize {
        self.sampled_ns
            .iter()
            .copied()
            .chain([self.exhaustive_max_n])
            .max()
            .unwrap_or(0)
    }

    /// The corpus, generated lazily in a fixed order.
    pub fn corpus(&self) -> impl Iterator<Item = Graph> + '_ {
        let exhaustive = (0..=self.exhaustive_max_n).flat_map(|n| {
            let slots = n * n.saturating_sub(1) / 2;
            (0..1u64 << slots).map(move |mask| graph_from_mask(n, mask))
        });
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let sampled = self
            .sampled_ns
            .iter()
            .flat_map(move |&n| std::iter::repeat_n(n, self.samples_per_n))
            .map(move |n| random_graph(&mut rng, n, 0.5));
        exhaustive.chain(sampled)
    }
}

/// Vertex pairs `(i, j)`, `i < j`, in graph6 column order.
fn pair_slots(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

/// The graph whose k-th pair slot is an edge iff bit k of `mask` is set.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    Graph::new(
        n,
        pair_slots(n)
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, p)| p),
    )
    .expect("slot pairs are valid")
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = pair_slots(n).filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, edges).expect("slot pairs are valid")
}

fn report(
    id: u8,
    name: &'static str,
    start: Instant,
    checked: usize,
    failures: &[String],
    budget: Option<Duration>,
) -> CriterionReport {
    let elapsed = start.elapsed();
    let over = budget.filter(|&b| elapsed > b);
    let mut detail = match failures {
        [] => String::new(),
        [first, ..] => format!("{} failures, first: {first}", failures.len()),
    };
    if let Some(b) = over {
        if !detail.is_empty() {
            detail.push_str("; ");
        }
        detail.push_str(&format!("exceeded time budget {b:?}"));
    }
    CriterionReport {
        id,
        name,
        passed: failures.is_empty() && over.is_none(),
        checked,
        detail,
        elapsed,
    }
}

fn describe(g: &Graph) -> String {
    emit_graph6(g).unwrap_or_else(|_| format!("{g:?}"))
}

/// Criterion 1: `certify` always verifies and agrees with the exhaustive matching search.
pub fn check_dichotomy(config: &SweepConfig) -> CriterionReport {
    let start = Instant::now();
    let oracle = Oracle::new(OracleLimits::uniform(config.max_n().max(16)));
    let mut failures = Vec::new();
    let mut checked = 0;
    for g in config.corpus() {
        checked += 1;
        let cert = match Certifier::new().certify(&g) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("{}: {e}", describe(&g)));
                continue;
            }
        };
        let has_pm = oracle.perfect_matching(&g).expect("within limit").is_some();
        if !verify_certificate(&g, &cert) || cert.is_perfect_matching() != has_pm {
            failures.push(format!(
                "{}: {cert:?}, oracle matching {has_pm}",
                describe(&g)
            ));
        }
    }
    report(
        1,
        "dichotomy sweep agrees with oracle",
        start,
        checked,
        &failures,
        Some(Duration::from_secs(120)),
    )
}

/// Criterion 2: Exactly one of the exhaustive searches succeeds on every corpus graph.
pub fn check_theorem(config: &SweepConfig) -> CriterionReport {
    let start = Instant::now();
    let oracle = Oracle::new(OracleLimits::uniform(config.max_n().max(16)));
    let mut failures = Vec::new();
    let mut checked = 0;
    for g in config.corpus() {
        checked += 1;
        if !oracle.tutte_equivalence_holds(&g).expect("within limit") {
            failures.push(describe(&g));
        }
    }
    report(
        2,
        "matching exists xor violator exists",
        start,
        checked,
        &failures,
        Some(Duration::from_secs(300)),
    )
}

/// Criterion 3: Flipping a perfect matching along its difference with another one
/// yields the other one.
pub fn check_augmentation(graphs: usize, seed: u64) -> CriterionReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let oracle = Oracle::default();
    let mut failures = Vec::new();
    let (mut found, mut pairs) = (0, 0);
    while found < graphs {
        let n = 2 * rng.gen_range(2..=5);
        let p = rng.gen_range(0.35..0.65);
        let g = random_graph(&mut rng, n, p);
        let all = oracle.all_perfect_matchings(&g).expect("n <= 10");
        if all.len() < 2 {
            continue;
        }
        found += 1;
        let pms: Vec<PerfectMatching> = all
            .into_iter()
            .map(|m| PerfectMatching::new(&g, m).expect("oracle matchings are perfect"))
            .collect();
        for (i, m) in pms.iter().enumerate() {
            for (j, other) in pms.iter().enumerate() {
                if i == j {
                    continue;
                }
                pairs += 1;
                let ok = (|| {
                    let d = matching_symm_diff(m.matching(), other.matching()).ok()?;
                    let alternating = is_alternating(&d, &m.spanning_graph()).ok()?;
                    let flipped = symm_diff_augment(m, &d).ok()?;
                    let back = symm_diff_augment(&flipped, &d).ok()?;
                    Some(
                        is_cycles_graph(&d)
                            && alternating
                            && &flipped == other
                            && &back == m
                            && verify_perfect_matching(&g, flipped.matching()),
                    )
                })();
                if ok != Some(true) {
                    failures.push(format!("{}: {m:?} -> {other:?}", describe(&g)));
                }
            }
        }
    }
    let mut r = report(
        3,
        "alternating-cycle flip between perfect matchings",
        start,
        pairs,
        &failures,
        None,
    );
    r.detail = format!(
        "{found} graphs{}{}",
        if r.detail.is_empty() { "" } else { "; " },
        r.detail
    );
    r
}

/// Criterion 4: Adding an edge never raises the odd-component count and changes it by
/// 0 or 2; violators of `G + e` are violators of `G`.
pub fn check_monotonicity(triples: usize, seed: u64) -> CriterionReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut checked = 0;
    while checked < triples {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let missing: Vec<_> = pair_slots(n).filter(|&(u, v)| !g.adjacent(u, v)).collect();
        let Some(&(u, v)) = missing.choose(&mut rng) else {
            continue;
        };
        checked += 1;
        let removed = VertexSet::from_bits(rng.gen::<u64>() & VertexSet::full(n).bits());
        let bigger = g.add_edge(u, v).expect("valid pair");
        let before = odd_component_count(&g.delete_verts(removed));
        let after = odd_component_count(&bigger.delete_verts(removed));
        let lifts = !is_tutte_violator(&bigger, removed) || is_tutte_violator(&g, removed);
        if after > before || !(before - after).is_multiple_of(2) || before - after > 2 || !lifts {
            failures.push(format!(
                "{} + {{{u},{v}}} minus {removed:?}: {before} -> {after}",
                describe(&g)
            ));
        }
    }
    report(
        4,
        "odd components are monotone under edge addition",
        start,
        checked,
        &failures,
        None,
    )
}

/// Criterion 5: No vertex set violates the condition in a graph with a perfect matching.
pub fn check_necessity(config: &SweepConfig) -> CriterionReport {
    let start = Instant::now();
    let oracle = Oracle::new(OracleLimits::uniform(config.max_n().max(16)));
    let mut failures = Vec::new();
    let mut checked = 0;
    for g in config.corpus() {
        if oracle.perfect_matching(&g).expect("within limit").is_none() {
            continue;
        }
        checked += 1;
        let n = g.vertex_count();
        if let Some(u) = (0..1u64 << n)
            .map(VertexSet::from_bits)
            .find(|&u| is_tutte_violator(&g, u))
        {
            failures.push(format!(
                "{} has a matching and violator {u:?}",
                describe(&g)
            ));
        }
    }
    report(
        5,
        "graphs with a perfect matching have no violator",
        start,
        checked,
        &failures,
        None,
    )
}

/// Universal hubs joined to disjoint cliques, randomly relabeled; at least as
/// many hubs as odd cliques and an even total.
pub fn random_clique_instance<R: Rng>(rng: &mut R) -> Graph {
    loop {
        let mut sizes: Vec<usize> = (0..rng.gen_range(0..=5))
            .map(|_| rng.gen_range(1..=5))
            .collect();
        let odd = sizes.iter().filter(|&&s| s % 2 == 1).count();
        let hubs = odd + rng.gen_range(0..=3);
        let total = hubs + sizes.iter().sum::<usize>();
        if total % 2 == 1 {
            sizes.push(1);
            if hubs < odd + 1 {
                continue;
            }
        }
        let total = hubs + sizes.iter().sum::<usize>();
        if total == 0 || total > 40 {
            continue;
        }
        let mut label: Vec<usize> = (0..total).collect();
        label.shuffle(rng);
        let mut edges = Vec::new();
        for h in 0..hubs {
            edges.extend((0..total).filter(|&v| v != h).map(|v| (label[h], label[v])));
        }
        let mut next = hubs;
        for s in sizes {
            for i in next..next + s {
                edges.extend((i + 1..next + s).map(|j| (label[i], label[j])));
            }
            next += s;
        }
        return Graph::new(total, edges).expect("labels are in range");
    }
}

/// Criterion 6: The clique-case construction on generated instances.
pub fn check_clique_case(instances: usize, seed: u64) -> CriterionReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..instances {
        let g = random_clique_instance(&mut rng);
        match clique_components_matching(&g) {
            Ok(pm) if verify_perfect_matching(&g, pm.matching()) => {}
            other => failures.push(format!("{}: {other:?}", describe(&g))),
        }
    }
    report(
        6,
        "clique-case construction yields perfect matchings",
        start,
        instances,
        &failures,
        Some(Duration::from_secs(10)),
    )
}

/// A recorded input to [`combine_near_matchings`] and the branch it takes.
#[derive(Clone, Copy, Debug)]
pub struct BranchFixture {
    pub graph6: &'static str,
    pub witness: NearMatchingWitness,
    /// Perfect matching of `G + xb`.
    pub first: &'static [(usize, usize)],
    /// Perfect matching of `G + ac`.
    pub second: &'static [(usize, usize)],
    pub branch: CombineBranch,
}

/// One instance per branch, found by [`discover_branch_instances`] with seed 2024.
pub const BRANCH_FIXTURES: &[BranchFixture] = &[
    BranchFixture {
        graph6: "ETY?",
        witness: NearMatchingWitness {
            x: 0,
            a: 2,
            b: 4,
            c: 1,
        },
        first: &[(0, 5), (1, 4), (2, 3)],
        second: &[(0, 5), (1, 4), (2, 3)],
        branch: CombineBranch::FirstAvoidsExtraEdge,
    },
    BranchFixture {
        graph6: "Gi\\VsC",
        witness: NearMatchingWitness {
            x: 0,
            a: 1,
            b: 2,
            c: 7,
        },
        first: &[(0, 2), (1, 4), (3, 5), (6, 7)],
        second: &[(0, 1), (2, 4), (3, 5), (6, 7)],
        branch: CombineBranch::SecondAvoidsExtraEdge,
    },
    BranchFixture {
        graph6: "GJQVF[",
        witness: NearMatchingWitness {
            x: 0,
            a: 5,
            b: 3,
            c: 1,
        },
        first: &[(0, 3), (1, 4), (2, 6), (5, 7)],
        second: &[(0, 6), (1, 5), (2, 3), (4, 7)],
        branch: CombineBranch::DisjointCycle,
    },
    BranchFixture {
        graph6: "Gi\\VsC",
        witness: NearMatchingWitness {
            x: 0,
            a: 1,
            b: 2,
            c: 7,
        },
        first: &[(0, 2), (1, 4), (3, 5), (6, 7)],
        second: &[(0, 6), (1, 7), (2, 4), (3, 5)],
        branch: CombineBranch::SameCycleEndsAtX,
    },
    BranchFixture {
        graph6: "GwEutW",
        witness: NearMatchingWitness {
            x: 0,
            a: 5,
            b: 3,
            c: 1,
        },
        first: &[(0, 3), (1, 6), (2, 5), (4, 7)],
        second: &[(0, 2), (1, 5), (3, 6), (4, 7)],
        branch: CombineBranch::SameCycleEndsAtB,
    },
];

/// A combine input together with the branch it takes.
pub type BranchInstance = (
    Graph,
    NearMatchingWitness,
    Matching,
    Matching,
    CombineBranch,
);

/// Searches random graphs for one combine input per branch. Used to
/// regenerate [`BRANCH_FIXTURES`].
pub fn discover_branch_instances(seed: u64, attempts: usize) -> Vec<BranchInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let oracle = Oracle::default();
    let mut found: Vec<Option<BranchInstance>> = vec![None; CombineBranch::ALL.len()];
    for _ in 0..attempts {
        if found.iter().all(Option::is_some) {
            break;
        }
        let n = 2 * rng.gen_range(2..=4);
        let p = rng.gen_range(0.3..0.7);
        let g = random_graph(&mut rng, n, p);
        let Some(w) = find_non_clique_witness(&g) else {
            continue;
        };
        let g1 = g.add_edge(w.x, w.b).expect("witness vertices");
        let g2 = g.add_edge(w.a, w.c).expect("witness vertices");
        let firsts = oracle.all_perfect_matchings(&g1).expect("small");
        let seconds = oracle.all_perfect_matchings(&g2).expect("small");
        for m1 in &firsts {
            for m2 in &seconds {
                let p1 = PerfectMatching::new(&g1, m1.clone()).expect("oracle output");
                let p2 = PerfectMatching::new(&g2, m2.clone()).expect("oracle output");
                if let Ok((_, branch)) = combine_near_matchings(&g, &w, &p1, &p2) {
                    let slot = &mut found[CombineBranch::ALL
                        .iter()
                        .position(|&b| b == branch)
                        .unwrap()];
                    if slot.is_none() {
                        *slot = Some((g.clone(), w, m1.clone(), m2.clone(), branch));
                    }
                }
            }
        }
    }
    found.into_iter().flatten().collect()
}

/// Criterion 7: Every combine branch is exercised by a recorded fixture, and the
/// certifier's own branch counts over the corpus are reported.
pub fn check_combine_branches(config: &SweepConfig) -> CriterionReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for fx in BRANCH_FIXTURES {
        let outcome = (|| {
            let g = parse_graph6(fx.graph6).map_err(|e| e.to_string())?;
            let n = g.vertex_count();
            let g1 = g
                .add_edge(fx.witness.x, fx.witness.b)
                .map_err(|e| e.to_string())?;
            let g2 = g
                .add_edge(fx.witness.a, fx.witness.c)
                .map_err(|e| e.to_string())?;
            let m1 =
                Matching::from_pairs(n, fx.first.iter().copied()).map_err(|e| e.to_string())?;
            let m2 =
                Matching::from_pairs(n, fx.second.iter().copied()).map_err(|e| e.to_string())?;
            let m1 = PerfectMatching::new(&g1, m1).map_err(|e| e.to_string())?;
            let m2 = PerfectMatching::new(&g2, m2).map_err(|e| e.to_string())?;
            let (pm, branch) =
                combine_near_matchings(&g, &fx.witness, &m1, &m2).map_err(|e| e.to_string())?;
            if branch != fx.branch {
                return Err(format!("took {branch:?}"));
            }
            if !verify_perfect_matching(&g, pm.matching()) {
                return Err("result does not verify".into());
            }
            Ok(branch)
        })();
        match outcome {
            Ok(b) => seen.push(b),
            Err(e) => failures.push(format!("{} ({:?}): {e}", fx.graph6, fx.branch)),
        }
    }
    for b in CombineBranch::ALL {
        if !seen.contains(&b) {
            failures.push(format!("no fixture drives {b:?}"));
        }
    }

    // Branch counts reached by certify itself over the corpus.
    let mut reached = [0usize; 5];
    for g in config.corpus().filter(|g| g.vertex_count() % 2 == 0) {
        let mut c = Certifier::without_memo();
        if c.certify(&g).is_ok() {
            for (slot, b) in reached.iter_mut().zip(CombineBranch::ALL) {
                *slot += c.stats().branch_count(b);
            }
        }
    }
    let mut r = report(
        7,
        "combine branches covered by fixtures",
        start,
        BRANCH_FIXTURES.len(),
        &failures,
        None,
    );
    let counts = CombineBranch::ALL
        .iter()
        .zip(reached)
        .map(|(b, k)| format!("{b:?}={k}"))
        .collect::<Vec<_>>()
        .join(" ");
    r.detail = if r.detail.is_empty() {
        format!("certify reached {counts}")
    } else {
        format!("{}; certify reached {counts}", r.detail)
    };
    r
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner).collect::<Vec<_>>()).expect("valid")
}

/// Criterion 8: Named graphs with known answers.
pub fn check_known_instances() -> CriterionReport {
    let start = Instant::now();
    let oracle = Oracle::default();
    let mut failures = Vec::new();
    let mut checked = 0;

    let p = petersen();
    checked += 1;
    let cert = Certifier::new().certify(&p);
    let oracle_pm = oracle.perfect_matching(&p).ok().flatten().is_some();
    if !matches!(&cert, Ok(Certificate::PerfectMatching(m)) if verify_perfect_matching(&p, m))
        || !oracle_pm
    {
        failures.push(format!("petersen: {cert:?}, oracle {oracle_pm}"));
    }

    let claw = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).expect("valid");
    checked += 1;
    match Certifier::new().certify(&claw) {
        Ok(Certificate::TutteViolator(u)) if is_tutte_violator(&claw, u) => {}
        other => failures.push(format!("claw: {other:?}")),
    }

    let odd = [
        Graph::empty(1).expect("valid"),
        Graph::new(3, [(0, 1), (1, 2)]).expect("valid"),
        Graph::complete(5).expect("valid"),
        Graph::new(7, (0..7).map(|i| (i, (i + 1) % 7))).expect("valid"),
        Graph::empty(9).expect("valid"),
        Graph::complete(11).expect("valid"),
    ];
    for g in &odd {
        checked += 1;
        match Certifier::new().certify(g) {
            Ok(Certificate::TutteViolator(u)) if u.is_empty() => {}
            other => failures.push(format!("{}: {other:?}", describe(g))),
        }
    }

    for m in 0..=6 {
        checked += 1;
        let k = Graph::complete(2 * m).expect("valid");
        let t = Instant::now();
        let cert = Certifier::new().certify(&k);
        let took = t.elapsed();
        let ok = matches!(&cert, Ok(Certificate::PerfectMatching(pm)) if verify_perfect_matching(&k, pm));
        if !ok || took > Duration::from_secs(1) {
            failures.push(format!("K{}: {cert:?} in {took:?}", 2 * m));
        }
    }
    report(8, "known instances", start, checked, &failures, None)
}

/// Criterion 9: graph6 encode/decode are mutually inverse.
pub fn check_graph6_roundtrip(graphs: usize, seed: u64) -> CriterionReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let fixtures = [
        ("A_", Graph::new(2, [(0, 1)]).expect("valid")),
        ("A?", Graph::empty(2).expect("valid")),
        ("@", Graph::empty(1).expect("valid")),
        ("D?{", Graph::new(5, (0..4).map(|v| (v, 4))).expect("valid")),
    ];
    for (text, g) in &fixtures {
        let decoded = parse_graph6(text);
        if decoded.as_ref() != Ok(g) || emit_graph6(g).as_deref() != Ok(*text) {
            failures.push(format!("fixture {text}: {decoded:?}"));
        }
    }
    for _ in 0..graphs {
        let n = rng.gen_range(0..=12);
        let p = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, n, p);
        let text = match emit_graph6(&g) {
            Ok(t) => t,
            Err(e) => {
                failures.push(format!("{g:?}: {e}"));
                continue;
            }
        };
        let back = parse_graph6(&text);
        let again = back.as_ref().ok().and_then(|b| emit_graph6(b).ok());
        if back.as_ref() != Ok(&g) || again.as_deref() != Some(text.as_str()) {
            failures.push(format!("{text}: {back:?}"));
        }
    }
    report(
        9,
        "graph6 round trip",
        start,
        graphs + fixtures.len(),
        &failures,
        None,
    )
}

/// Scales for the non-corpus criteria.
#[derive(Clone, Debug)]
pub struct SuiteScale {
    pub augmentation_graphs: usize,
    pub monotonicity_triples: usize,
    pub clique_instances: usize,
    pub graph6_graphs: usize,
}

impl Default for SuiteScale {
    fn default() -> Self {
        SuiteScale {
            augmentation_graphs: 1_000,
            monotonicity_triples: 10_000,
            clique_instances: 500,
            graph6_graphs: 10_000,
        }
    }
}

/// Runs all nine criteria in order.
pub fn run_all(config: &SweepConfig, scale: &SuiteScale) -> Vec<CriterionReport> {
    let seed = config.seed;
    vec![
        check_dichotomy(config),
        check_theorem(config),
        check_augmentation(scale.augmentation_graphs, seed ^ 3),
        check_monotonicity(scale.monotonicity_triples, seed ^ 4),
        check_necessity(config),
        check_clique_case(scale.clique_instances, seed ^ 6),
        check_combine_branches(config),
        check_known_instances(),
        check_graph6_roundtrip(scale.graph6_graphs, seed ^ 9),
    ]
}

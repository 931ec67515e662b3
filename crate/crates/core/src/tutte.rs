//! The perfect-matching / Tutte-violator dichotomy.
//!
//! [`certify`] decides every graph by recursion over edge additions:
//!
//! 1. odd vertex count: the empty set is a violator;
//! 2. the universal vertices form a violator: return them;
//! 3. every component left after deleting the universal vertices is a clique:
//!    build a perfect matching directly ([`clique_components_matching`]);
//! 4. otherwise pick a [`NearMatchingWitness`] `(x, a, b, c)` and certify
//!    `G + xb` and `G + ac`. A violator of either supergraph is a violator of
//!    `G` (deleting a vertex set from a graph with one more edge never leaves
//!    more odd components). Two perfect matchings are merged into one of `G`
//!    by [`combine_near_matchings`].
//!
//! Each recursive call adds a missing edge, so the recursion terminates. The
//! worst case is exponential in the number of missing edges; a memo table
//! keyed by edge set absorbs the repeated supergraphs.

use std::collections::HashMap;

use crate::graph::{Edge, Graph, Subgraph, VertexSet};
use crate::matching::{
    cycle_through_edge, matching_symm_diff, symm_diff_augment, Matching, MatchingError,
    PerfectMatching,
};
use crate::represent::{choose_representatives, represents};
use crate::walk::{connected_components, odd_component_count};

/// Vertices adjacent to every other vertex.
pub fn universal_verts(g: &Graph) -> VertexSet {
    let all = g.vertices();
    (0..g.vertex_count())
        .filter(|&v| g.neighbors(v) == all.without(v))
        .collect()
}

pub fn delete_universal_verts(g: &Graph) -> Subgraph<'_> {
    g.delete_verts(universal_verts(g))
}

/// `|U|` is smaller than the number of odd components of `G - U`.
/// Sets that are not vertex subsets of `g` are never violators.
pub fn is_tutte_violator(g: &Graph, u: VertexSet) -> bool {
    u.is_subset(g.vertices()) && u.len() < odd_component_count(&g.delete_verts(u))
}

/// `Some(∅)` exactly when the vertex count is odd.
pub fn empty_violator_if_odd(g: &Graph) -> Option<VertexSet> {
    (g.vertex_count() % 2 == 1).then_some(VertexSet::EMPTY)
}

/// Perfect matching for a graph whose non-universal part splits into cliques.
///
/// One vertex of each odd clique (its minimum) is matched to a universal
/// vertex, the i-th such representative to the i-th smallest universal vertex.
/// What remains of each clique is even and is paired in ascending order, and
/// the unused universal vertices are paired among themselves.
pub fn clique_components_matching(g: &Graph) -> Result<PerfectMatching, MatchingError> {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return Err(MatchingError::PreconditionViolated(format!(
            "odd vertex count {n}"
        )));
    }
    let universal = universal_verts(g);
    if is_tutte_violator(g, universal) {
        return Err(MatchingError::PreconditionViolated(format!(
            "universal vertices {universal:?} form a Tutte violator"
        )));
    }
    let rest = g.delete_verts(universal);
    let partition = connected_components(&rest);
    if let Some(c) = partition.components().iter().find(|&&c| !g.is_clique(c)) {
        return Err(MatchingError::PreconditionViolated(format!(
            "component {c:?} is not a clique"
        )));
    }

    let odd = partition.odd_ids();
    let reps = choose_representatives(&odd, &partition);
    if !represents(reps, &odd, &partition) {
        return Err(MatchingError::InternalInvariantBroken(format!(
            "{reps:?} does not represent the odd components"
        )));
    }

    let mut pairs = Vec::with_capacity(n / 2);
    let hubs = universal.to_vec();
    // reps ascend in component order since components are ordered by minimum
    pairs.extend(reps.iter().zip(hubs.iter().copied()));
    for &comp in partition.components() {
        let left = comp.difference(reps).to_vec();
        pairs.extend(left.chunks_exact(2).map(|p| (p[0], p[1])));
    }
    let spare = &hubs[reps.len()..];
    pairs.extend(spare.chunks_exact(2).map(|p| (p[0], p[1])));

    let m = Matching::from_pairs(n, pairs)?;
    PerfectMatching::new(g, m).map_err(|_| {
        MatchingError::InternalInvariantBroken("clique-case construction is not perfect".into())
    })
}

/// Four vertices around a non-clique component: `x - a - b` is an induced
/// path and `c` is a non-neighbor of `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NearMatchingWitness {
    pub x: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl NearMatchingWitness {
    /// Checks the adjacency and distinctness conditions against `g`.
    pub fn check(&self, g: &Graph) -> Result<(), MatchingError> {
        let Self { x, a, b, c } = *self;
        let n = g.vertex_count();
        let conditions = [
            (x < n && a < n && b < n && c < n, "vertex out of range"),
            (g.adjacent(x, a), "x must be adjacent to a"),
            (g.adjacent(a, b), "a must be adjacent to b"),
            (!g.adjacent(x, b), "x must not be adjacent to b"),
            (!g.adjacent(a, c), "a must not be adjacent to c"),
            (x != b, "x and b must differ"),
            (x != c, "x and c must differ"),
            (a != c, "a and c must differ"),
            (b != c, "b and c must differ"),
        ];
        match conditions.iter().find(|(ok, _)| !ok) {
            Some((_, why)) => Err(MatchingError::PreconditionViolated(format!(
                "witness {self:?}: {why}"
            ))),
            None => Ok(()),
        }
    }

    pub fn xb(&self) -> Edge {
        Edge::new(self.x, self.b).expect("x != b")
    }

    pub fn ac(&self) -> Edge {
        Edge::new(self.a, self.c).expect("a != c")
    }
}

/// The lexicographically smallest witness, or `None` when every component of
/// `G` minus its universal vertices is a clique.
pub fn find_non_clique_witness(g: &Graph) -> Option<NearMatchingWitness> {
    let rest = delete_universal_verts(g);
    for x in rest.verts() {
        for a in rest.neighbors(x) {
            let far = rest.neighbors(a).difference(g.neighbors(x)).without(x);
            if let Some(b) = far.first() {
                // a is not universal, so it misses some vertex
                let c = g
                    .vertices()
                    .difference(g.neighbors(a))
                    .without(a)
                    .first()
                    .expect("non-universal vertex has a non-neighbor");
                return Some(NearMatchingWitness { x, a, b, c });
            }
        }
    }
    None
}

/// Which route [`combine_near_matchings`] took.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CombineBranch {
    /// The matching of `G + xb` does not use `xb`.
    FirstAvoidsExtraEdge,
    /// The matching of `G + ac` does not use `ac`.
    SecondAvoidsExtraEdge,
    /// `xb` lies off the alternating cycle through `ac`; flip along that cycle.
    DisjointCycle,
    /// Same cycle; the walk from `a` along `ac` first meets `x`.
    SameCycleEndsAtX,
    /// Same cycle; the walk from `a` along `ac` first meets `b`.
    SameCycleEndsAtB,
}

impl CombineBranch {
    pub const ALL: [CombineBranch; 5] = [
        CombineBranch::FirstAvoidsExtraEdge,
        CombineBranch::SecondAvoidsExtraEdge,
        CombineBranch::DisjointCycle,
        CombineBranch::SameCycleEndsAtX,
        CombineBranch::SameCycleEndsAtB,
    ];

    fn index(self) -> usize {
        self as usize
    }
}

/// Merges a perfect matching of `G + xb` and one of `G + ac` into a perfect
/// matching of `G`.
pub fn combine_near_matchings(
    g: &Graph,
    w: &NearMatchingWitness,
    m1: &PerfectMatching,
    m2: &PerfectMatching,
) -> Result<(PerfectMatching, CombineBranch), MatchingError> {
    w.check(g)?;
    let (xb, ac) = (w.xb(), w.ac());
    let g1 = g.add_edge(w.x, w.b)?;
    let g2 = g.add_edge(w.a, w.c)?;
    if !crate::matching::verify_perfect_matching(&g1, m1.matching()) {
        return Err(MatchingError::PreconditionViolated(
            "first matching is not a perfect matching of G + xb".into(),
        ));
    }
    if !crate::matching::verify_perfect_matching(&g2, m2.matching()) {
        return Err(MatchingError::PreconditionViolated(
            "second matching is not a perfect matching of G + ac".into(),
        ));
    }

    let finish = |m: Matching, branch: CombineBranch| {
        PerfectMatching::new(g, m)
            .map(|pm| (pm, branch))
            .map_err(|_| {
                MatchingError::InternalInvariantBroken(format!(
                    "{branch:?} produced a non-matching of G"
                ))
            })
    };

    if !m1.uses(xb) {
        return finish(m1.matching().clone(), CombineBranch::FirstAvoidsExtraEdge);
    }
    if !m2.uses(ac) {
        return finish(m2.matching().clone(), CombineBranch::SecondAvoidsExtraEdge);
    }

    let diff = matching_symm_diff(m1.matching(), m2.matching())?;
    let cycle = cycle_through_edge(&diff, w.a, w.c)?;
    let support = cycle.support();
    let n = g.vertex_count();

    let (flip, branch) = match support.iter().position(|&v| v == w.x || v == w.b) {
        None => {
            let flip = Graph::new(n, cycle.edges().into_iter().map(|e| (e.lo(), e.hi())))?;
            (flip, CombineBranch::DisjointCycle)
        }
        Some(i) => {
            // support[0..=i] runs a, c, .., y with y in {x, b}; it ends on
            // y's M2-edge, so closing it with the G-edge ya keeps alternation.
            let y = support[i];
            let path = &support[..=i];
            let closing = std::iter::once((y, w.a));
            let flip = Graph::new(n, path.windows(2).map(|p| (p[0], p[1])).chain(closing))?;
            let branch = if y == w.x {
                CombineBranch::SameCycleEndsAtX
            } else {
                CombineBranch::SameCycleEndsAtB
            };
            (flip, branch)
        }
    };
    let flipped = symm_diff_augment(m2, &flip)?;
    finish(flipped.into_matching(), branch)
}

/// Either a perfect matching or a Tutte violator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Certificate {
    PerfectMatching(Matching),
    TutteViolator(VertexSet),
}

impl Certificate {
    pub fn is_perfect_matching(&self) -> bool {
        matches!(self, Certificate::PerfectMatching(_))
    }

    pub fn violator(&self) -> Option<VertexSet> {
        match self {
            Certificate::TutteViolator(u) => Some(*u),
            Certificate::PerfectMatching(_) => None,
        }
    }
}

pub fn verify_certificate(g: &Graph, cert: &Certificate) -> bool {
    match cert {
        Certificate::PerfectMatching(m) => crate::matching::verify_perfect_matching(g, m),
        Certificate::TutteViolator(u) => is_tutte_violator(g, *u),
    }
}

/// Counters collected while certifying.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CertifyStats {
    pub calls: usize,
    pub memo_hits: usize,
    pub clique_cases: usize,
    pub lifted_violators: usize,
    /// Indexed like [`CombineBranch::ALL`].
    pub combine_branches: [usize; 5],
}

impl CertifyStats {
    pub fn branch_count(&self, branch: CombineBranch) -> usize {
        self.combine_branches[branch.index()]
    }
}

/// Recursive certifier with an optional memo table.
#[derive(Debug)]
pub struct Certifier {
    memo: Option<HashMap<Graph, Certificate>>,
    stats: CertifyStats,
}

impl Default for Certifier {
    fn default() -> Self {
        Certifier::new()
    }
}

impl Certifier {
    pub fn new() -> Self {
        Certifier {
            memo: Some(HashMap::new()),
            stats: CertifyStats::default(),
        }
    }

    pub fn without_memo() -> Self {
        Certifier {
            memo: None,
            stats: CertifyStats::default(),
        }
    }

    pub fn stats(&self) -> &CertifyStats {
        &self.stats
    }

    /// Certifies `g` and checks the result before returning it. An error here
    /// means a bug in this crate.
    pub fn certify(&mut self, g: &Graph) -> Result<Certificate, MatchingError> {
        let cert = self.decide(g)?;
        if !verify_certificate(g, &cert) {
            return Err(MatchingError::InternalInvariantBroken(format!(
                "certificate {cert:?} does not verify for {g:?}"
            )));
        }
        Ok(cert)
    }

    fn decide(&mut self, g: &Graph) -> Result<Certificate, MatchingError> {
        self.stats.calls += 1;
        if let Some(u) = empty_violator_if_odd(g) {
            return Ok(Certificate::TutteViolator(u));
        }
        let universal = universal_verts(g);
        if is_tutte_violator(g, universal) {
            return Ok(Certificate::TutteViolator(universal));
        }
        let Some(w) = find_non_clique_witness(g) else {
            self.stats.clique_cases += 1;
            let pm = clique_components_matching(g)?;
            return Ok(Certificate::PerfectMatching(pm.into_matching()));
        };

        if let Some(hit) = self.memo.as_ref().and_then(|m| m.get(g)) {
            self.stats.memo_hits += 1;
            return Ok(hit.clone());
        }

        let g1 = g.add_edge(w.x, w.b)?;
        let m1 = match self.decide(&g1)? {
            Certificate::TutteViolator(u) => return self.lift(g, u),
            Certificate::PerfectMatching(m) => PerfectMatching::new(&g1, m)?,
        };
        let g2 = g.add_edge(w.a, w.c)?;
        let m2 = match self.decide(&g2)? {
            Certificate::TutteViolator(u) => return self.lift(g, u),
            Certificate::PerfectMatching(m) => PerfectMatching::new(&g2, m)?,
        };
        let (pm, branch) = combine_near_matchings(g, &w, &m1, &m2)?;
        self.stats.combine_branches[branch.index()] += 1;
        let cert = Certificate::PerfectMatching(pm.into_matching());
        if let Some(memo) = self.memo.as_mut() {
            memo.insert(g.clone(), cert.clone());
        }
        Ok(cert)
    }

    /// A violator of `G + e` carried back to `G`.
    fn lift(&mut self, g: &Graph, u: VertexSet) -> Result<Certificate, MatchingError> {
        self.stats.lifted_violators += 1;
        if !is_tutte_violator(g, u) {
            return Err(MatchingError::InternalInvariantBroken(format!(
                "violator {u:?} of a supergraph does not lift to {g:?}"
            )));
        }
        let cert = Certificate::TutteViolator(u);
        if let Some(memo) = self.memo.as_mut() {
            memo.insert(g.clone(), cert.clone());
        }
        Ok(cert)
    }
}

/// Decides `g`: a verified perfect matching or a verified Tutte violator.
pub fn certify(g: &Graph) -> Certificate {
    Certifier::new()
        .certify(g)
        .expect("certification failed its own verification")
}

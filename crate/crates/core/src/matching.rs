//! Matchings as partner maps, and the alternating-cycle flip that moves
//! between perfect matchings.

use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, VertexSet};
use crate::walk::Walk;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} appears in more than one pair")]
    VertexReused(usize),
    #[error("not a perfect matching of the host graph")]
    NotPerfect,
    #[error("edge {0} is absent")]
    EdgeAbsent(Edge),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),
}

/// A partial partner map on `0..n`. Nothing is checked on construction
/// beyond ranges and pair disjointness; use [`verify_matching`] against a host.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    partner: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            partner: vec![None; n],
        }
    }

    /// Raw partner map, for callers that need to express arbitrary (possibly
    /// invalid) maps.
    pub fn from_partner(partner: Vec<Option<usize>>) -> Self {
        Matching { partner }
    }

    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self, MatchingError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut m = Matching::empty(n);
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n }.into());
                }
            }
            if m.partner[u].is_some() {
                return Err(MatchingError::VertexReused(u));
            }
            if m.partner[v].is_some() {
                return Err(MatchingError::VertexReused(v));
            }
            m.partner[u] = Some(v);
            m.partner[v] = Some(u);
        }
        Ok(m)
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(
        n: usize,
        edges: I,
    ) -> Result<Self, MatchingError> {
        Matching::from_pairs(n, edges.into_iter().map(|e| (e.lo(), e.hi())))
    }

    pub fn vertex_count(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, v: usize) -> Option<usize> {
        self.partner.get(v).copied().flatten()
    }

    pub fn covered(&self) -> VertexSet {
        (0..self.partner.len())
            .filter(|&v| self.partner[v].is_some())
            .collect()
    }

    /// Matched pairs as sorted edges. Fixed points and out-of-range partners
    /// are skipped.
    pub fn edges(&self) -> Vec<Edge> {
        let n = self.partner.len();
        (0..n)
            .filter_map(|v| match self.partner[v] {
                Some(w) if v < w && w < n => Edge::new(v, w).ok(),
                _ => None,
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.edges().len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.iter().all(Option::is_none)
    }

    /// The matching's edges as a graph on all `n` vertices.
    pub fn spanning_graph(&self) -> Result<Graph, GraphError> {
        Graph::new(
            self.vertex_count(),
            self.edges().into_iter().map(|e| (e.lo(), e.hi())),
        )
    }
}

impl std::fmt::Debug for Matching {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matching{:?}", self.edges())
    }
}

/// Partner map is an involution without fixed points whose pairs are host edges.
pub fn verify_matching(host: &Graph, m: &Matching) -> bool {
    let n = host.vertex_count();
    if m.vertex_count() != n {
        return false;
    }
    (0..n).all(|v| match m.partner[v] {
        None => true,
        Some(w) => w < n && w != v && m.partner[w] == Some(v) && host.adjacent(v, w),
    })
}

pub fn verify_perfect_matching(host: &Graph, m: &Matching) -> bool {
    verify_matching(host, m) && m.partner.iter().all(Option::is_some)
}

/// A matching that was verified perfect against some host at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PerfectMatching(Matching);

impl PerfectMatching {
    pub fn new(host: &Graph, m: Matching) -> Result<Self, MatchingError> {
        if verify_perfect_matching(host, &m) {
            Ok(PerfectMatching(m))
        } else {
            Err(MatchingError::NotPerfect)
        }
    }

    pub fn matching(&self) -> &Matching {
        &self.0
    }

    pub fn into_matching(self) -> Matching {
        self.0
    }

    pub fn partner(&self, v: usize) -> usize {
        self.0.partner[v].expect("perfect matchings cover every vertex")
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.0.edges()
    }

    pub fn uses(&self, e: Edge) -> bool {
        self.0.partner(e.lo()) == Some(e.hi())
    }

    pub fn spanning_graph(&self) -> Graph {
        self.0
            .spanning_graph()
            .expect("verified matchings have in-range loop-free pairs")
    }
}

impl std::fmt::Debug for PerfectMatching {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PerfectMatching{:?}", self.edges())
    }
}

/// Every vertex has degree 0 or 2.
pub fn is_cycles_graph(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|v| matches!(g.degree(v), 0 | 2))
}

/// For every vertex and every two distinct neighbors of it in `g`, exactly
/// one of the two edges lies in `m`.
pub fn is_alternating(g: &Graph, m: &Graph) -> Result<bool, GraphError> {
    if g.vertex_count() != m.vertex_count() {
        return Err(GraphError::SizeMismatch {
            left: g.vertex_count(),
            right: m.vertex_count(),
        });
    }
    for v in 0..g.vertex_count() {
        let nbrs = g.neighbors(v);
        let in_m = nbrs.intersection(m.neighbors(v));
        let out_m = nbrs.difference(in_m);
        // any two distinct neighbors must split across M: at most one of each kind
        if in_m.len() > 1 || out_m.len() > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Flips `m` along `d`: the result's edges are `edges(m) ∆ edges(d)`.
/// `d` must be a disjoint union of cycles alternating with `m`.
pub fn symm_diff_augment(m: &PerfectMatching, d: &Graph) -> Result<PerfectMatching, MatchingError> {
    let mg = m.spanning_graph();
    if mg.vertex_count() != d.vertex_count() {
        return Err(GraphError::SizeMismatch {
            left: mg.vertex_count(),
            right: d.vertex_count(),
        }
        .into());
    }
    if !is_cycles_graph(d) {
        return Err(MatchingError::PreconditionViolated(
            "flip graph is not a union of cycles".into(),
        ));
    }
    if !is_alternating(d, &mg)? {
        return Err(MatchingError::PreconditionViolated(
            "flip graph does not alternate with the matching".into(),
        ));
    }
    let flipped = mg.symm_diff(d)?;
    graph_as_perfect_matching(&flipped).ok_or_else(|| {
        MatchingError::InternalInvariantBroken(format!(
            "flip produced {flipped:?}, which is not a perfect matching"
        ))
    })
}

/// Reads a 1-regular graph as the perfect matching of itself.
fn graph_as_perfect_matching(g: &Graph) -> Option<PerfectMatching> {
    let n = g.vertex_count();
    let mut partner = vec![None; n];
    for (v, slot) in partner.iter_mut().enumerate() {
        let nbrs = g.neighbors(v);
        if nbrs.len() != 1 {
            return None;
        }
        *slot = nbrs.first();
    }
    PerfectMatching::new(g, Matching { partner }).ok()
}

/// The unique cycle of `d` through edge `{u,v}`, as a closed walk
/// `[u, v, .., u]`.
pub fn cycle_through_edge(d: &Graph, u: usize, v: usize) -> Result<Walk<'_>, MatchingError> {
    let e = Edge::new(u, v)?;
    if !is_cycles_graph(d) {
        return Err(MatchingError::PreconditionViolated(
            "graph is not a union of cycles".into(),
        ));
    }
    if !d.has_edge(e) {
        return Err(MatchingError::EdgeAbsent(e));
    }
    let mut walk = vec![u, v];
    let (mut prev, mut cur) = (u, v);
    while cur != u {
        let next = d
            .neighbors(cur)
            .without(prev)
            .first()
            .expect("degree-2 vertex has a second neighbor");
        walk.push(next);
        prev = cur;
        cur = next;
    }
    Ok(Walk::new(d, walk)?)
}

/// `edges(m1) ∆ edges(m2)` as a graph. When both matchings are perfect the
/// result is checked to be a union of cycles.
pub fn matching_symm_diff(m1: &Matching, m2: &Matching) -> Result<Graph, MatchingError> {
    if m1.vertex_count() != m2.vertex_count() {
        return Err(GraphError::SizeMismatch {
            left: m1.vertex_count(),
            right: m2.vertex_count(),
        }
        .into());
    }
    let d = m1.spanning_graph()?.symm_diff(&m2.spanning_graph()?)?;
    let n = m1.vertex_count();
    let both_perfect = m1.covered().len() == n && m2.covered().len() == n;
    if both_perfect && !is_cycles_graph(&d) {
        return Err(MatchingError::InternalInvariantBroken(format!(
            "symmetric difference of perfect matchings is not a union of cycles: {d:?}"
        )));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn pm(host: &Graph, pairs: &[(usize, usize)]) -> PerfectMatching {
        PerfectMatching::new(
            host,
            Matching::from_pairs(host.vertex_count(), pairs.iter().copied()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn verify_matching_cases() {
        let k2 = path(2);
        let m = Matching::from_pairs(2, [(0, 1)]).unwrap();
        assert!(verify_matching(&k2, &m));
        assert!(!verify_matching(&Graph::empty(2).unwrap(), &m));
        let fixed = Matching::from_partner(vec![Some(0), None]);
        assert!(!verify_matching(&k2, &fixed));
        let not_involutive = Matching::from_partner(vec![Some(1), None]);
        assert!(!verify_matching(&k2, &not_involutive));
        assert!(!verify_matching(&path(3), &m));
    }

    #[test]
    fn from_pairs_rejects_reuse() {
        assert_eq!(
            Matching::from_pairs(3, [(0, 1), (1, 2)]),
            Err(MatchingError::VertexReused(1))
        );
    }

    #[test]
    fn verify_perfect_cases() {
        let c4 = cycle(4);
        let m = Matching::from_pairs(4, [(0, 1), (2, 3)]).unwrap();
        assert!(verify_perfect_matching(&c4, &m));
        let m = Matching::from_pairs(3, [(0, 1)]).unwrap();
        assert!(!verify_perfect_matching(&path(3), &m));
        assert!(verify_perfect_matching(
            &Graph::empty(0).unwrap(),
            &Matching::empty(0)
        ));
    }

    #[test]
    fn cycles_graph_cases() {
        assert!(is_cycles_graph(&cycle(4)));
        assert!(!is_cycles_graph(&path(3)));
        let union =
            Graph::new(8, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)]).unwrap();
        assert!(is_cycles_graph(&union));
    }

    #[test]
    fn alternating_cases() {
        let c4 = cycle(4);
        let m = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(is_alternating(&c4, &m).unwrap());
        let bad = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        assert!(!is_alternating(&c4, &bad).unwrap());
        let claw = star(3);
        let m = Graph::new(4, [(0, 1)]).unwrap();
        assert!(!is_alternating(&claw, &m).unwrap());
        assert!(is_alternating(&c4, &path(3)).is_err());
    }

    #[test]
    fn augment_cases() {
        let c4 = cycle(4);
        let m = pm(&c4, &[(0, 1), (2, 3)]);
        let out = symm_diff_augment(&m, &c4).unwrap();
        assert_eq!(out, pm(&c4, &[(1, 2), (3, 0)]));

        let empty = Graph::empty(4).unwrap();
        assert_eq!(symm_diff_augment(&m, &empty).unwrap(), m);

        let c6 = cycle(6);
        let m = pm(&c6, &[(0, 1), (2, 3), (4, 5)]);
        let out = symm_diff_augment(&m, &c6).unwrap();
        assert_eq!(out, pm(&c6, &[(1, 2), (3, 4), (5, 0)]));
    }

    #[test]
    fn augment_rejects_bad_flip_graph() {
        let k4 = Graph::complete(4).unwrap();
        let m = pm(&k4, &[(0, 1), (2, 3)]);
        assert!(matches!(
            symm_diff_augment(&m, &path(4)),
            Err(MatchingError::PreconditionViolated(_))
        ));
        // a 4-cycle that does not alternate with m
        let c = Graph::new(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert!(matches!(
            symm_diff_augment(&m, &c),
            Err(MatchingError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn cycle_extraction() {
        let c4 = cycle(4);
        let w = cycle_through_edge(&c4, 0, 1).unwrap();
        assert_eq!(w.support(), &[0, 1, 2, 3, 0]);
        assert!(w.classify().is_cycle);

        let two = Graph::new(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)]).unwrap();
        let w = cycle_through_edge(&two, 2, 1).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.support(), &[2, 1, 0, 2]);

        assert_eq!(
            cycle_through_edge(&c4, 0, 2).unwrap_err(),
            MatchingError::EdgeAbsent(Edge::new(0, 2).unwrap())
        );
        assert!(matches!(
            cycle_through_edge(&path(3), 0, 1),
            Err(MatchingError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn matching_symm_diff_cases() {
        let m = Matching::from_pairs(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(matching_symm_diff(&m, &m).unwrap().edge_count(), 0);
        let m2 = Matching::from_pairs(4, [(1, 2), (3, 0)]).unwrap();
        assert_eq!(matching_symm_diff(&m, &m2).unwrap(), cycle(4));
        let m3 = Matching::from_pairs(4, [(0, 3), (1, 2)]).unwrap();
        let d = matching_symm_diff(&m, &m3).unwrap();
        assert!(is_cycles_graph(&d));
        assert_eq!(d, Graph::new(4, [(1, 0), (0, 3), (3, 2), (2, 1)]).unwrap());
        assert!(is_alternating(&d, &m.spanning_graph().unwrap()).unwrap());
        assert!(is_alternating(&d, &m3.spanning_graph().unwrap()).unwrap());
    }
}

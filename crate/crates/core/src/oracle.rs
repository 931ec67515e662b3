//! Exhaustive ground truth for small graphs.
//!
//! Nothing here calls into the certifier or the component machinery of
//! [`crate::walk`]; odd components are counted with a separate union-find
//! so the two routes can be compared.

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::matching::Matching;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle limit is {limit}")]
    LimitExceeded { n: usize, limit: usize },
}

/// Vertex-count ceilings for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub matching_max_n: usize,
    pub violator_max_n: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            matching_max_n: 16,
            violator_max_n: 12,
        }
    }
}

impl OracleLimits {
    /// Both limits set to `n`.
    pub fn uniform(n: usize) -> Self {
        OracleLimits {
            matching_max_n: n,
            violator_max_n: n,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Oracle {
    limits: OracleLimits,
}

impl Oracle {
    pub fn new(limits: OracleLimits) -> Self {
        Oracle { limits }
    }

    pub fn limits(&self) -> OracleLimits {
        self.limits
    }

    fn check(n: usize, limit: usize) -> Result<(), OracleError> {
        if n > limit {
            Err(OracleError::LimitExceeded { n, limit })
        } else {
            Ok(())
        }
    }

    /// Some perfect matching, found by backtracking on the lowest uncovered vertex.
    pub fn perfect_matching(&self, g: &Graph) -> Result<Option<Matching>, OracleError> {
        Self::check(g.vertex_count(), self.limits.matching_max_n)?;
        let mut found = None;
        let mut pairs = Vec::new();
        search(g, g.vertices(), &mut pairs, &mut |pairs| {
            found = Some(pairs.to_vec());
            false
        });
        Ok(found.map(|pairs| {
            Matching::from_pairs(g.vertex_count(), pairs).expect("backtracking pairs are disjoint")
        }))
    }

    pub fn count_perfect_matchings(&self, g: &Graph) -> Result<u64, OracleError> {
        Self::check(g.vertex_count(), self.limits.matching_max_n)?;
        let mut count = 0u64;
        search(g, g.vertices(), &mut Vec::new(), &mut |_| {
            count += 1;
            true
        });
        Ok(count)
    }

    /// Every perfect matching, in backtracking order.
    pub fn all_perfect_matchings(&self, g: &Graph) -> Result<Vec<Matching>, OracleError> {
        Self::check(g.vertex_count(), self.limits.matching_max_n)?;
        let n = g.vertex_count();
        let mut out = Vec::new();
        search(g, g.vertices(), &mut Vec::new(), &mut |pairs| {
            out.push(Matching::from_pairs(n, pairs.iter().copied()).expect("disjoint pairs"));
            true
        });
        Ok(out)
    }

    /// A violator of least cardinality, ties broken lexicographically.
    pub fn violator(&self, g: &Graph) -> Result<Option<VertexSet>, OracleError> {
        let n = g.vertex_count();
        Self::check(n, self.limits.violator_max_n)?;
        for k in 0..=n {
            for subset in (0..n).combinations(k) {
                let u: VertexSet = subset.into_iter().collect();
                if k < odd_components_after_deleting(g, u) {
                    return Ok(Some(u));
                }
            }
        }
        Ok(None)
    }

    /// Exactly one of the two exhaustive searches succeeds.
    pub fn tutte_equivalence_holds(&self, g: &Graph) -> Result<bool, OracleError> {
        let matched = self.perfect_matching(g)?.is_some();
        let violated = self.violator(g)?.is_some();
        Ok(matched != violated)
    }
}

/// Calls `visit` on each perfect matching of the vertices in `free`;
/// `visit` returns whether to keep going. Returns false once stopped.
fn search<F>(g: &Graph, free: VertexSet, pairs: &mut Vec<(usize, usize)>, visit: &mut F) -> bool
where
    F: FnMut(&[(usize, usize)]) -> bool,
{
    let Some(v) = free.first() else {
        return visit(pairs);
    };
    let rest = free.without(v);
    for w in g.neighbors(v).intersection(rest) {
        pairs.push((v, w));
        let go_on = search(g, rest.without(w), pairs, visit);
        pairs.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// Odd components of `G - removed`, counted with union-find over the edge list.
pub fn odd_components_after_deleting(g: &Graph, removed: VertexSet) -> usize {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for e in g.edges() {
        if removed.contains(e.lo()) || removed.contains(e.hi()) {
            continue;
        }
        let (a, b) = (root(&mut parent, e.lo()), root(&mut parent, e.hi()));
        if a != b {
            parent[a] = b;
        }
    }
    let mut size = vec![0usize; n];
    for v in (0..n).filter(|&v| !removed.contains(v)) {
        size[root(&mut parent, v)] += 1;
    }
    size.iter().filter(|&&s| s % 2 == 1).count()
}

//! Finite simple graphs over dense vertex ids, and subgraphs of them.
//!
//! Adjacency is kept as one `u64` bitmask per vertex, so graphs are limited to
//! [`MAX_VERTICES`] vertices. Every operation returns a new value; nothing is
//! mutated after construction.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex count mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("{0} vertices requested, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("edge {0} is not an edge of the ambient graph")]
    NotInAmbient(Edge),
    #[error("edge {0} has an endpoint outside the subgraph's vertex set")]
    EndpointOutsideVerts(Edge),
    #[error("vertex {0} is not in the subgraph")]
    VertexNotInSubgraph(usize),
    #[error("walk must contain at least one vertex")]
    EmptyWalk,
    #[error("walk steps from {0} to {1}, which are not adjacent")]
    NotAdjacent(usize, usize),
}

/// A set of vertex ids below [`MAX_VERTICES`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ascending iteration.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An unordered pair of distinct vertices, stored as `(min, max)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Result<Self, GraphError> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Edge(u, v)),
            std::cmp::Ordering::Greater => Ok(Edge(v, u)),
            std::cmp::Ordering::Equal => Err(GraphError::LoopEdge(u)),
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint opposite `v`, if `v` is an endpoint.
    pub fn other(self, v: usize) -> Option<usize> {
        if v == self.0 {
            Some(self.1)
        } else if v == self.1 {
            Some(self.0)
        } else {
            None
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.0, e.1]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = GraphError;
    fn try_from([u, v]: [usize; 2]) -> Result<Self, GraphError> {
        Edge::new(u, v)
    }
}

/// A finite simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from a list of vertex pairs. Duplicates (in either
    /// orientation) collapse to one edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            let e = Edge::new(u, v)?;
            g.link(e);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::full(n).without(v).bits();
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        Graph { n: adj.len(), adj }
    }

    fn link(&mut self, e: Edge) {
        self.adj[e.0] |= 1u64 << e.1;
        self.adj[e.1] |= 1u64 << e.0;
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    fn check_same_size(&self, other: &Graph) -> Result<(), GraphError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(GraphError::SizeMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.adjacent(e.0, e.1)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges in ascending `(lo, hi)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let higher = self.adj[u] & !VertexSet::full(u + 1).bits();
            out.extend(VertexSet(higher).iter().map(|v| Edge(u, v)));
        }
        out
    }

    /// Number of vertex pairs that are not edges.
    pub fn non_edge_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2 - self.edge_count()
    }

    /// `G ⊔ {u,v}`.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let e = Edge::new(u, v)?;
        let mut g = self.clone();
        g.link(e);
        Ok(g)
    }

    /// Edges lying in exactly one of the two graphs; the vertex set is unchanged.
    pub fn symm_diff(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.check_same_size(other)?;
        let adj = self
            .adj
            .iter()
            .zip(&other.adj)
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(Graph { n: self.n, adj })
    }

    /// `self ≤ other`: every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &Graph) -> Result<bool, GraphError> {
        self.check_same_size(other)?;
        Ok(self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0))
    }

    /// True iff every pair of distinct vertices in `set` is adjacent.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.without(v).is_subset(VertexSet(self.adj[v])))
    }

    /// The subgraph left after removing `removed` and every edge touching it.
    /// Vertex ids are not renumbered.
    pub fn delete_verts(&self, removed: VertexSet) -> Subgraph<'_> {
        let verts = self.vertices().difference(removed);
        let adj = (0..self.n)
            .map(|v| {
                if verts.contains(v) {
                    self.adj[v] & verts.bits()
                } else {
                    0
                }
            })
            .collect();
        Subgraph {
            ambient: self,
            verts,
            adj,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A subgraph of an ambient graph: a vertex set plus an edge set whose edges
/// are ambient edges between active vertices. Isolated active vertices are
/// allowed.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgraph<'g> {
    ambient: &'g Graph,
    verts: VertexSet,
    adj: Vec<u64>,
}

impl<'g> Subgraph<'g> {
    pub fn new<I>(ambient: &'g Graph, verts: VertexSet, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        if let Some(v) = verts.iter().find(|&v| v >= ambient.n) {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: ambient.n,
            });
        }
        let mut adj = vec![0u64; ambient.n];
        for e in edges {
            if !ambient.has_edge(e) {
                return Err(GraphError::NotInAmbient(e));
            }
            if !verts.contains(e.0) || !verts.contains(e.1) {
                return Err(GraphError::EndpointOutsideVerts(e));
            }
            adj[e.0] |= 1u64 << e.1;
            adj[e.1] |= 1u64 << e.0;
        }
        Ok(Subgraph {
            ambient,
            verts,
            adj,
        })
    }

    /// The whole ambient graph viewed as a subgraph (`⊤`).
    pub fn top(ambient: &'g Graph) -> Self {
        ambient.delete_verts(VertexSet::EMPTY)
    }

    /// No vertices and no edges (`⊥`).
    pub fn bottom(ambient: &'g Graph) -> Self {
        Subgraph {
            ambient,
            verts: VertexSet::EMPTY,
            adj: vec![0; ambient.n],
        }
    }

    pub fn ambient(&self) -> &'g Graph {
        self.ambient
    }

    pub fn verts(&self) -> VertexSet {
        self.verts
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u] >> v & 1 == 1
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.spanning_coe().edges()
    }

    /// Vertices with at least one incident edge.
    pub fn support(&self) -> VertexSet {
        self.verts.iter().filter(|&v| self.adj[v] != 0).collect()
    }

    /// The subgraph's edges as a graph on the full ambient vertex range.
    pub fn spanning_coe(&self) -> Graph {
        Graph {
            n: self.ambient.n,
            adj: self.adj.clone(),
        }
    }

    /// The subgraph as a standalone graph on `0..|verts|`, together with the
    /// map from new ids to ambient ids (ascending).
    pub fn coe(&self) -> (Graph, Vec<usize>) {
        let to_ambient = self.verts.to_vec();
        let mut to_local = vec![usize::MAX; self.ambient.n];
        for (i, &v) in to_ambient.iter().enumerate() {
            to_local[v] = i;
        }
        let adj = to_ambient
            .iter()
            .map(|&v| {
                VertexSet(self.adj[v])
                    .iter()
                    .fold(0u64, |acc, w| acc | 1u64 << to_local[w])
            })
            .collect();
        (Graph::from_adjacency(adj), to_ambient)
    }
}

impl fmt::Debug for Subgraph<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subgraph(verts={:?}, edges={:?})",
            self.verts,
            self.edges()
        )
    }
}

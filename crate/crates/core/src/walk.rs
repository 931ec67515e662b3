//! Walks, reachability and connected components.

use crate::graph::{Edge, Graph, GraphError, Subgraph, VertexSet};

/// A nonempty vertex sequence in which consecutive vertices are adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk<'g> {
    host: &'g Graph,
    vertices: Vec<usize>,
}

/// How a walk classifies. Each flag implies the ones it is built on: a cycle
/// is a circuit, a circuit and a path are trails.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WalkClass {
    pub is_trail: bool,
    pub is_path: bool,
    pub is_circuit: bool,
    pub is_cycle: bool,
}

impl<'g> Walk<'g> {
    pub fn new(host: &'g Graph, vertices: Vec<usize>) -> Result<Self, GraphError> {
        let Some(&first) = vertices.first() else {
            return Err(GraphError::EmptyWalk);
        };
        if first >= host.vertex_count() {
            return Err(GraphError::VertexOutOfRange {
                vertex: first,
                n: host.vertex_count(),
            });
        }
        for pair in vertices.windows(2) {
            if !host.adjacent(pair[0], pair[1]) {
                return Err(GraphError::NotAdjacent(pair[0], pair[1]));
            }
        }
        Ok(Walk { host, vertices })
    }

    /// The single-vertex walk.
    pub fn nil(host: &'g Graph, v: usize) -> Result<Self, GraphError> {
        Walk::new(host, vec![v])
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn support(&self) -> &[usize] {
        &self.vertices
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        self.vertices[self.vertices.len() - 1]
    }

    /// Number of edges traversed.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_nil(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.vertices
            .windows(2)
            .map(|p| Edge::new(p[0], p[1]).expect("walk steps join distinct vertices"))
            .collect()
    }

    pub fn classify(&self) -> WalkClass {
        let edges = self.edges();
        let is_trail = no_duplicates(&edges);
        let is_path = is_trail && no_duplicates(&self.vertices);
        let is_circuit = is_trail && !self.is_nil() && self.start() == self.end();
        let is_cycle = is_circuit && no_duplicates(&self.vertices[1..]);
        WalkClass {
            is_trail,
            is_path,
            is_circuit,
            is_cycle,
        }
    }
}

fn no_duplicates<T: Ord + Copy>(items: &[T]) -> bool {
    let mut sorted = items.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// Vertices reachable from `start` inside the subgraph.
fn closure(sub: &Subgraph<'_>, start: usize) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next.union(sub.neighbors(v));
        }
        frontier = next.difference(seen);
        seen = seen.union(frontier);
    }
    seen
}

/// Whether some walk joins `u` and `v` using only the subgraph's edges.
pub fn reachable(sub: &Subgraph<'_>, u: usize, v: usize) -> Result<bool, GraphError> {
    for w in [u, v] {
        if !sub.verts().contains(w) {
            return Err(GraphError::VertexNotInSubgraph(w));
        }
    }
    Ok(closure(sub, u).contains(v))
}

/// The connected components of a subgraph's active vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    component_of: Vec<Option<usize>>,
    components: Vec<VertexSet>,
}

impl ComponentPartition {
    /// Component id of `v`, or `None` for vertices outside the partitioned set.
    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.component_of.get(v).copied().flatten()
    }

    /// Components ordered by their smallest vertex.
    pub fn components(&self) -> &[VertexSet] {
        &self.components
    }

    pub fn component(&self, id: usize) -> VertexSet {
        self.components[id]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Union of all components.
    pub fn vertices(&self) -> VertexSet {
        self.components
            .iter()
            .fold(VertexSet::EMPTY, |acc, &c| acc.union(c))
    }

    /// Ids of components with an odd number of vertices.
    pub fn odd_ids(&self) -> Vec<usize> {
        (0..self.components.len())
            .filter(|&i| self.components[i].len() % 2 == 1)
            .collect()
    }
}

pub fn connected_components(sub: &Subgraph<'_>) -> ComponentPartition {
    let mut component_of = vec![None; sub.ambient().vertex_count()];
    let mut components = Vec::new();
    let mut remaining = sub.verts();
    // Taking the minimum of what remains fixes the ordering by smallest member.
    while let Some(v) = remaining.first() {
        let comp = closure(sub, v);
        for w in comp {
            component_of[w] = Some(components.len());
        }
        components.push(comp);
        remaining = remaining.difference(comp);
    }
    ComponentPartition {
        component_of,
        components,
    }
}

pub fn odd_components(sub: &Subgraph<'_>) -> Vec<VertexSet> {
    connected_components(sub)
        .components
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .collect()
}

pub fn odd_component_count(sub: &Subgraph<'_>) -> usize {
    odd_components(sub).len()
}

//! Simple undirected graphs over dense vertex ids.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Index of a vertex inside one particular [`Graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for VertexId {
    fn from(index: usize) -> Self {
        VertexId(index)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An unordered vertex pair, always stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    pub fn new(a: impl Into<VertexId>, b: impl Into<VertexId>) -> Result<Self, GraphError> {
        let (a, b) = (a.into(), b.into());
        if a == b {
            return Err(GraphError::SelfLoop(a.0));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(&self) -> VertexId {
        self.u
    }

    pub fn v(&self) -> VertexId {
        self.v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} already present")]
    EdgeExists(usize, usize),
    #[error("edge {0}-{1} not present")]
    EdgeAbsent(usize, usize),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(usize),
    #[error("graph has no vertices")]
    Empty,
    #[error("new vertex needs at least one neighbor")]
    EmptyNeighborhood,
    #[error("deleting the only vertex would leave an empty graph")]
    WouldBeEmpty,
}

/// Immutable simple undirected graph.
///
/// Each adjacency list is strictly increasing, symmetric and loop-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse into one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        Ok(Self::from_raw_adjacency(adjacency))
    }

    /// Sorts and dedups each list. Callers guarantee symmetry and no loops.
    pub(crate) fn from_raw_adjacency(mut adjacency: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        debug_assert!(twice % 2 == 0);
        Graph {
            adjacency,
            edge_count: twice / 2,
        }
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v.0 < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v.0,
                n: self.n(),
            })
        }
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v.0].len())
    }

    /// All degrees indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Degrees sorted non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq = self.degrees();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// Sorted neighbor indices of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&v| v > u)
                .map(move |&v| Edge {
                    u: VertexId(u),
                    v: VertexId(v),
                })
        })
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges().map(|e| (e.u.0, e.v.0)).collect()
    }

    pub fn is_triangle_free(&self) -> bool {
        // For every edge u<v, look for a common neighbor via a sorted merge.
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list.iter().filter(|&&v| v > u) {
                let (a, b) = (&self.adjacency[u], &self.adjacency[v]);
                let (mut i, mut j) = (0, 0);
                while i < a.len() && j < b.len() {
                    match a[i].cmp(&b[j]) {
                        std::cmp::Ordering::Less => i += 1,
                        std::cmp::Ordering::Greater => j += 1,
                        std::cmp::Ordering::Equal => return false,
                    }
                }
            }
        }
        true
    }

    pub fn is_connected(&self) -> Result<bool, GraphError> {
        if self.n() == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(reached == self.n())
    }

    pub fn is_regular(&self) -> Result<bool, GraphError> {
        let first = self.adjacency.first().ok_or(GraphError::Empty)?.len();
        Ok(self.adjacency.iter().all(|l| l.len() == first))
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count + 1 == self.n() && self.is_connected().unwrap_or(false)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(GraphError::VertexOutOfRange {
                vertex: perm.len(),
                n,
            });
        }
        for &p in perm {
            if p >= n {
                return Err(GraphError::VertexOutOfRange { vertex: p, n });
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::DuplicateVertex(p));
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for (v, list) in self.adjacency.iter().enumerate() {
            adjacency[perm[v]] = list.iter().map(|&w| perm[w]).collect();
        }
        Ok(Graph::from_raw_adjacency(adjacency))
    }
}

/// Named graphs used across constructions, tests and the oracle catalog.
pub mod named {
    use super::Graph;

    /// `v0 - v1 - ... - v(n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).expect("valid path")
    }

    /// Requires `n >= 3`; smaller values fall back to a path.
    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((0, n - 1));
        }
        Graph::from_edge_list(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edge_list(n, &edges).expect("valid complete graph")
    }

    /// Parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Graph::from_edge_list(a + b, &edges).expect("valid complete bipartite graph")
    }

    /// Center 0, leaves `1..=m`.
    pub fn star(m: usize) -> Graph {
        complete_bipartite(1, m)
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn from_edge_list_examples() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3, path(3));
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(g.edge_pairs(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn from_edge_list_rejects_bad_input() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            Graph::from_edge_list(2, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
    }

    #[test]
    fn degrees() {
        assert_eq!(star(3).degree(VertexId(0)), Ok(3));
        assert_eq!(complete(4).degree(VertexId(2)), Ok(3));
        assert_eq!(Graph::empty(2).degree(VertexId(1)), Ok(0));
        assert!(Graph::empty(2).degree(VertexId(2)).is_err());
        assert_eq!(path(4).degree_sequence(), vec![2, 2, 1, 1]);
        assert_eq!(complete(3).degree_sequence(), vec![2, 2, 2]);
        assert_eq!(star(3).degree_sequence(), vec![3, 1, 1, 1]);
    }

    #[test]
    fn predicates() {
        assert!(cycle(5).is_triangle_free());
        assert!(!complete(3).is_triangle_free());
        assert!(complete_bipartite(3, 4).is_triangle_free());

        assert_eq!(path(5).is_connected(), Ok(true));
        let two_edges = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.is_connected(), Ok(false));
        assert_eq!(Graph::empty(1).is_connected(), Ok(true));
        assert_eq!(Graph::empty(0).is_connected(), Err(GraphError::Empty));

        assert_eq!(cycle(6).is_regular(), Ok(true));
        assert_eq!(path(3).is_regular(), Ok(false));
        assert_eq!(complete(4).is_regular(), Ok(true));
        assert_eq!(Graph::empty(0).is_regular(), Err(GraphError::Empty));

        assert!(path(6).is_tree());
        assert!(!cycle(6).is_tree());
        assert!(!two_edges.is_tree());
    }

    #[test]
    fn edge_normalization() {
        let e = Edge::new(5, 2).unwrap();
        assert_eq!((e.u(), e.v()), (VertexId(2), VertexId(5)));
        assert_eq!(Edge::new(3, 3), Err(GraphError::SelfLoop(3)));
    }

    #[test]
    fn relabel_checks_permutation() {
        let g = path(3);
        assert!(g.relabel(&[0, 0, 1]).is_err());
        let h = g.relabel(&[2, 0, 1]).unwrap();
        assert_eq!(h.edge_pairs(), vec![(0, 1), (0, 2)]);
    }
}

//! Graph operations. Every function returns a new graph; operations that
//! remove or merge vertices also return an [`IdMap`] from old to new ids.

use std::fmt;
use std::str::FromStr;

use crate::graph::{Edge, Graph, GraphError, VertexId};

/// Old id -> new id, `None` for vertices that no longer exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdMap(Vec<Option<VertexId>>);

impl IdMap {
    pub fn get(&self, old: VertexId) -> Option<VertexId> {
        self.0.get(old.0).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Option<VertexId>] {
        &self.0
    }
}

fn require_edge(g: &Graph, u: VertexId, v: VertexId) -> Result<(), GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(GraphError::SelfLoop(u.0));
    }
    if !g.has_edge(u.0, v.0) {
        return Err(GraphError::EdgeAbsent(u.0.min(v.0), u.0.max(v.0)));
    }
    Ok(())
}

fn adjacency_of(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect()
}

pub fn add_edge(g: &Graph, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(GraphError::SelfLoop(u.0));
    }
    if g.has_edge(u.0, v.0) {
        return Err(GraphError::EdgeExists(u.0.min(v.0), u.0.max(v.0)));
    }
    let mut adj = adjacency_of(g);
    adj[u.0].push(v.0);
    adj[v.0].push(u.0);
    Ok(Graph::from_raw_adjacency(adj))
}

pub fn delete_edge(g: &Graph, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
    require_edge(g, u, v)?;
    let mut adj = adjacency_of(g);
    adj[u.0].retain(|&x| x != v.0);
    adj[v.0].retain(|&x| x != u.0);
    Ok(Graph::from_raw_adjacency(adj))
}

/// Replaces `uv` by `u - w - v`; the new vertex `w` gets id `g.n()`.
pub fn subdivide_edge(g: &Graph, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
    require_edge(g, u, v)?;
    let w = g.n();
    let mut adj = adjacency_of(g);
    for (a, b) in [(u.0, v.0), (v.0, u.0)] {
        adj[a].retain(|&x| x != b);
        adj[a].push(w);
    }
    adj.push(vec![u.0, v.0]);
    Ok(Graph::from_raw_adjacency(adj))
}

/// Merges `u` and `v` into one vertex placed at the smaller of the two ids.
/// Parallel edges collapse, so common neighbors lose one degree.
pub fn contract_edge(g: &Graph, u: VertexId, v: VertexId) -> Result<(Graph, IdMap), GraphError> {
    require_edge(g, u, v)?;
    let (keep, gone) = (u.0.min(v.0), u.0.max(v.0));
    let map: Vec<usize> = (0..g.n())
        .map(|x| match x {
            x if x == gone => keep,
            x if x > gone => x - 1,
            x => x,
        })
        .collect();
    let mut adj = vec![Vec::new(); g.n() - 1];
    for e in g.edges() {
        let (a, b) = (map[e.u().0], map[e.v().0]);
        if a != b {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let ids = IdMap(map.into_iter().map(|x| Some(VertexId(x))).collect());
    Ok((Graph::from_raw_adjacency(adj), ids))
}

/// Adds vertex `g.n()` adjacent to exactly `neighbors` (at least one).
pub fn add_vertex(g: &Graph, neighbors: &[VertexId]) -> Result<Graph, GraphError> {
    if neighbors.is_empty() {
        return Err(GraphError::EmptyNeighborhood);
    }
    let mut seen = vec![false; g.n()];
    for &x in neighbors {
        g.check_vertex(x)?;
        if std::mem::replace(&mut seen[x.0], true) {
            return Err(GraphError::DuplicateVertex(x.0));
        }
    }
    let w = g.n();
    let mut adj = adjacency_of(g);
    for &x in neighbors {
        adj[x.0].push(w);
    }
    adj.push(neighbors.iter().map(|x| x.0).collect());
    Ok(Graph::from_raw_adjacency(adj))
}

/// Removes `v` and its edges; later ids shift down by one.
pub fn delete_vertex(g: &Graph, v: VertexId) -> Result<(Graph, IdMap), GraphError> {
    g.check_vertex(v)?;
    if g.n() < 2 {
        return Err(GraphError::WouldBeEmpty);
    }
    let shift = |x: usize| if x > v.0 { x - 1 } else { x };
    let adj = (0..g.n())
        .filter(|&x| x != v.0)
        .map(|x| {
            g.neighbors(x)
                .iter()
                .filter(|&&y| y != v.0)
                .map(|&y| shift(y))
                .collect()
        })
        .collect();
    let ids = IdMap(
        (0..g.n())
            .map(|x| (x != v.0).then(|| VertexId(shift(x))))
            .collect(),
    );
    Ok((Graph::from_raw_adjacency(adj), ids))
}

/// Product vertex `(a, b)` has id `a * h.n() + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    if g.n() == 0 || h.n() == 0 {
        return Err(GraphError::Empty);
    }
    let m = h.n();
    let mut adj = vec![Vec::new(); g.n() * m];
    for a in 0..g.n() {
        for b in 0..m {
            let list = &mut adj[a * m + b];
            list.extend(h.neighbors(b).iter().map(|&d| a * m + d));
            list.extend(g.neighbors(a).iter().map(|&c| c * m + b));
        }
    }
    Ok(Graph::from_raw_adjacency(adj))
}

/// Decodes a product vertex id into its `(g, h)` coordinates.
pub fn product_coordinates(h_n: usize, id: VertexId) -> (VertexId, VertexId) {
    (VertexId(id.0 / h_n), VertexId(id.0 % h_n))
}

/// Disjoint union plus every edge between the two sides. `g` keeps ids
/// `0..g.n()`, `h`'s vertices follow.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    if g.n() == 0 || h.n() == 0 {
        return Err(GraphError::Empty);
    }
    let offset = g.n();
    let total = offset + h.n();
    let mut adj = Vec::with_capacity(total);
    for a in 0..g.n() {
        let mut list = g.neighbors(a).to_vec();
        list.extend(offset..total);
        adj.push(list);
    }
    for b in 0..h.n() {
        let mut list: Vec<usize> = (0..offset).collect();
        list.extend(h.neighbors(b).iter().map(|&d| d + offset));
        adj.push(list);
    }
    Ok(Graph::from_raw_adjacency(adj))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperationKind {
    AddEdge,
    DeleteEdge,
    Subdivide,
    Contract,
    AddVertex,
    DeleteVertex,
    CartesianProduct,
    Join,
}

impl OperationKind {
    pub const ALL: [OperationKind; 8] = [
        OperationKind::AddEdge,
        OperationKind::DeleteEdge,
        OperationKind::Subdivide,
        OperationKind::Contract,
        OperationKind::AddVertex,
        OperationKind::DeleteVertex,
        OperationKind::CartesianProduct,
        OperationKind::Join,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperationKind::AddEdge => "add-edge",
            OperationKind::DeleteEdge => "delete-edge",
            OperationKind::Subdivide => "subdivide",
            OperationKind::Contract => "contract",
            OperationKind::AddVertex => "add-vertex",
            OperationKind::DeleteVertex => "delete-vertex",
            OperationKind::CartesianProduct => "cartesian",
            OperationKind::Join => "join",
        }
    }
}

impl fmt::Display for OperationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OperationKind::ALL
            .into_iter()
            .find(|k| k.name() == s || (s == "cartesian-product" && *k == OperationKind::CartesianProduct))
            .ok_or_else(|| {
                let names: Vec<_> = OperationKind::ALL.iter().map(|k| k.name()).collect();
                format!("unknown operation `{s}` (expected one of {})", names.join(", "))
            })
    }
}

/// An operation together with its target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Operation {
    AddEdge(Edge),
    DeleteEdge(Edge),
    Subdivide(Edge),
    Contract(Edge),
    AddVertex(Vec<VertexId>),
    DeleteVertex(VertexId),
    CartesianProduct(Graph),
    Join(Graph),
}

impl Operation {
    pub fn kind(&self) -> OperationKind {
        match self {
            Operation::AddEdge(_) => OperationKind::AddEdge,
            Operation::DeleteEdge(_) => OperationKind::DeleteEdge,
            Operation::Subdivide(_) => OperationKind::Subdivide,
            Operation::Contract(_) => OperationKind::Contract,
            Operation::AddVertex(_) => OperationKind::AddVertex,
            Operation::DeleteVertex(_) => OperationKind::DeleteVertex,
            Operation::CartesianProduct(_) => OperationKind::CartesianProduct,
            Operation::Join(_) => OperationKind::Join,
        }
    }

    pub fn partner(&self) -> Option<&Graph> {
        match self {
            Operation::CartesianProduct(h) | Operation::Join(h) => Some(h),
            _ => None,
        }
    }

    /// Compact target description without commas, for reports.
    pub fn target_label(&self) -> String {
        match self {
            Operation::AddEdge(e)
            | Operation::DeleteEdge(e)
            | Operation::Subdivide(e)
            | Operation::Contract(e) => e.to_string(),
            Operation::AddVertex(ns) => {
                let ids: Vec<_> = ns.iter().map(|v| v.to_string()).collect();
                format!("N:{}", ids.join(";"))
            }
            Operation::DeleteVertex(v) => format!("v:{v}"),
            Operation::CartesianProduct(h) | Operation::Join(h) => {
                format!("H:n={};m={}", h.n(), h.edge_count())
            }
        }
    }

    pub fn apply(&self, g: &Graph) -> Result<OperationApplication, GraphError> {
        let (after, id_map) = match self {
            Operation::AddEdge(e) => (add_edge(g, e.u(), e.v())?, None),
            Operation::DeleteEdge(e) => (delete_edge(g, e.u(), e.v())?, None),
            Operation::Subdivide(e) => (subdivide_edge(g, e.u(), e.v())?, None),
            Operation::Contract(e) => {
                let (after, map) = contract_edge(g, e.u(), e.v())?;
                (after, Some(map))
            }
            Operation::AddVertex(ns) => (add_vertex(g, ns)?, None),
            Operation::DeleteVertex(v) => {
                let (after, map) = delete_vertex(g, *v)?;
                (after, Some(map))
            }
            Operation::CartesianProduct(h) => (cartesian_product(g, h)?, None),
            Operation::Join(h) => (join(g, h)?, None),
        };
        Ok(OperationApplication {
            operation: self.clone(),
            before: g.clone(),
            after,
            id_map,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperationApplication {
    pub operation: Operation,
    pub before: Graph,
    pub after: Graph,
    pub id_map: Option<IdMap>,
}

impl OperationApplication {
    /// Vertex count of the result as implied by the operation kind.
    pub fn expected_vertex_count(&self) -> usize {
        let n = self.before.n();
        match &self.operation {
            Operation::AddEdge(_) | Operation::DeleteEdge(_) => n,
            Operation::Subdivide(_) | Operation::AddVertex(_) => n + 1,
            Operation::Contract(_) | Operation::DeleteVertex(_) => n - 1,
            Operation::CartesianProduct(h) => n * h.n(),
            Operation::Join(h) => n + h.n(),
        }
    }
}

//! Exact longest degree-monotone path.
//!
//! Only non-decreasing paths are searched: reversing one gives a
//! non-increasing path of the same length, so the two maxima agree.
//!
//! The branch-and-bound bound works per "degree class component": the
//! connected pieces of the subgraph spanned by edges whose endpoints have
//! equal degree. A non-decreasing path visits one such component as a
//! contiguous run and can only leave it towards strictly higher degree, so
//! `reach(C) = |C| + max reach over higher-degree components adjacent to C`
//! bounds every path that enters `C`. When no edge joins equal degrees,
//! every component is a single vertex, the orientation low -> high degree
//! is acyclic and `reach` is the exact answer (the DAG fast path).

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};

/// Environment variable overriding [`SearchLimits::default`]'s budget.
pub const NODE_BUDGET_ENV: &str = "DMP_NODE_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Maximum number of path extensions before the search gives up.
    pub node_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            node_budget: 50_000_000,
        }
    }
}

impl SearchLimits {
    /// Default limits, with the budget taken from `DMP_NODE_BUDGET` if set.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(NODE_BUDGET_ENV) {
            Ok(raw) => raw
                .trim()
                .parse()
                .map(|node_budget| SearchLimits { node_budget })
                .map_err(|_| format!("{NODE_BUDGET_ENV}={raw:?} is not a non-negative integer")),
            Err(_) => Ok(SearchLimits::default()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has no vertices")]
    Empty,
    #[error("search budget of {budget} expansions exceeded")]
    BudgetExceeded { budget: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    NonDecreasing,
    NonIncreasing,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::NonDecreasing => Direction::NonIncreasing,
            Direction::NonIncreasing => Direction::NonDecreasing,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::NonDecreasing => "non-decreasing",
            Direction::NonIncreasing => "non-increasing",
        })
    }
}

/// A path whose degrees are monotone in `direction`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonePath {
    vertices: Vec<VertexId>,
    direction: Direction,
}

impl MonotonePath {
    /// Validates adjacency, distinctness and monotonicity against `g`.
    pub fn new(
        g: &Graph,
        vertices: Vec<VertexId>,
        direction: Direction,
    ) -> Result<Self, InvalidPath> {
        check_distinct(g, &vertices)?;
        if !is_path(g, &vertices) {
            return Err(InvalidPath::NotAPath);
        }
        if !follows(g, &vertices, direction) {
            return Err(InvalidPath::NotMonotone(direction));
        }
        Ok(MonotonePath {
            vertices,
            direction,
        })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn reversed(&self) -> MonotonePath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        MonotonePath {
            vertices,
            direction: self.direction.reversed(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidPath {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("consecutive vertices are not adjacent")]
    NotAPath,
    #[error("degrees are not {0}")]
    NotMonotone(Direction),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    DagFastPath,
    BranchAndBound,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::DagFastPath => "dag-fast-path",
            Method::BranchAndBound => "branch-and-bound",
            Method::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MpResult {
    pub value: usize,
    pub witness: MonotonePath,
    pub method: Method,
}

fn check_distinct(g: &Graph, vertices: &[VertexId]) -> Result<(), GraphError> {
    let mut seen = vec![false; g.n()];
    for &v in vertices {
        g.check_vertex(v)?;
        if std::mem::replace(&mut seen[v.0], true) {
            return Err(GraphError::DuplicateVertex(v.0));
        }
    }
    Ok(())
}

fn is_path(g: &Graph, vertices: &[VertexId]) -> bool {
    vertices.windows(2).all(|w| g.has_edge(w[0].0, w[1].0))
}

fn follows(g: &Graph, vertices: &[VertexId], direction: Direction) -> bool {
    let deg = |v: VertexId| g.neighbors(v.0).len();
    vertices.windows(2).all(|w| match direction {
        Direction::NonDecreasing => deg(w[0]) <= deg(w[1]),
        Direction::NonIncreasing => deg(w[0]) >= deg(w[1]),
    })
}

/// True iff `vertices` is a path of `g` whose degrees are non-decreasing or
/// non-increasing. Single vertices are monotone.
pub fn is_degree_monotone(g: &Graph, vertices: &[VertexId]) -> Result<bool, GraphError> {
    check_distinct(g, vertices)?;
    Ok(is_path(g, vertices)
        && (follows(g, vertices, Direction::NonDecreasing)
            || follows(g, vertices, Direction::NonIncreasing)))
}

/// Equal-degree components and their reach bounds.
struct ClassComponents {
    component: Vec<usize>,
    size: Vec<usize>,
    /// Best reach among strictly-higher-degree components adjacent to each one.
    exit: Vec<usize>,
}

impl ClassComponents {
    fn new(g: &Graph, degree: &[usize]) -> Self {
        let n = g.n();
        let mut component = vec![usize::MAX; n];
        let mut size = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if component[start] != usize::MAX {
                continue;
            }
            let id = size.len();
            let mut stack = vec![start];
            let mut these = Vec::new();
            component[start] = id;
            while let Some(v) = stack.pop() {
                these.push(v);
                for &w in g.neighbors(v) {
                    if degree[w] == degree[v] && component[w] == usize::MAX {
                        component[w] = id;
                        stack.push(w);
                    }
                }
            }
            size.push(these.len());
            members.push(these);
        }

        let mut by_degree: Vec<usize> = (0..size.len()).collect();
        by_degree.sort_by_key(|&c| std::cmp::Reverse(degree[members[c][0]]));
        let mut exit = vec![0; size.len()];
        for c in by_degree {
            let best = members[c]
                .iter()
                .flat_map(|&v| g.neighbors(v).iter().map(move |&w| (v, w)))
                .filter(|&(v, w)| degree[w] > degree[v])
                .map(|(_, w)| size[component[w]] + exit[component[w]])
                .max()
                .unwrap_or(0);
            exit[c] = best;
        }
        ClassComponents {
            component,
            size,
            exit,
        }
    }

    fn reach(&self, v: usize) -> usize {
        let c = self.component[v];
        self.size[c] + self.exit[c]
    }
}

/// Start order: ascending degree, then ascending id.
fn start_order(degree: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..degree.len()).collect();
    order.sort_by_key(|&v| (degree[v], v));
    order
}

fn to_ids(path: &[usize]) -> Vec<VertexId> {
    path.iter().copied().map(VertexId).collect()
}

/// Exact answer by dynamic programming over the degree orientation, or
/// `None` if some edge joins two vertices of equal degree.
pub fn mp_dag_fast_path(g: &Graph) -> Option<MpResult> {
    if g.n() == 0 {
        return None;
    }
    let degree = g.degrees();
    if g.edges().any(|e| degree[e.u().0] == degree[e.v().0]) {
        return None;
    }
    let mut by_degree: Vec<usize> = (0..g.n()).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(degree[v]));
    let mut longest = vec![1usize; g.n()];
    let mut next = vec![usize::MAX; g.n()];
    for v in by_degree {
        for &w in g.neighbors(v) {
            // Strict `>` keeps the smallest id among equally good successors.
            if degree[w] > degree[v] && longest[w] + 1 > longest[v] {
                longest[v] = longest[w] + 1;
                next[v] = w;
            }
        }
    }
    let mut best_start = None;
    for v in start_order(&degree) {
        if best_start.is_none_or(|b: usize| longest[v] > longest[b]) {
            best_start = Some(v);
        }
    }
    let mut path = vec![best_start?];
    while let Some(&last) = path.last() {
        match next[last] {
            usize::MAX => break,
            w => path.push(w),
        }
    }
    Some(MpResult {
        value: path.len(),
        witness: MonotonePath {
            vertices: to_ids(&path),
            direction: Direction::NonDecreasing,
        },
        method: Method::DagFastPath,
    })
}

/// Depth-first branch and bound over non-decreasing paths.
///
/// Deterministic: starts are tried by ascending (degree, id), neighbors by
/// ascending id, and the incumbent is replaced only by a strictly longer
/// path.
pub fn mp_branch_and_bound(g: &Graph, limits: SearchLimits) -> Result<MpResult, SolveError> {
    let n = g.n();
    if n == 0 {
        return Err(SolveError::Empty);
    }
    let degree = g.degrees();
    let classes = ClassComponents::new(g, &degree);
    let ceiling = (0..n).map(|v| classes.reach(v)).max().unwrap_or(1);

    let mut best: Vec<usize> = Vec::new();
    let mut visited = vec![false; n];
    let mut path: Vec<usize> = Vec::with_capacity(n);
    // Per path position: length of the trailing equal-degree run and the
    // next neighbor slot to try.
    let mut run: Vec<usize> = Vec::with_capacity(n);
    let mut cursor: Vec<usize> = Vec::with_capacity(n);
    let mut expansions: u64 = 0;

    'starts: for start in start_order(&degree) {
        if best.len() >= ceiling {
            break;
        }
        if classes.reach(start) <= best.len() {
            continue;
        }
        expansions += 1;
        if expansions > limits.node_budget {
            return Err(SolveError::BudgetExceeded {
                budget: limits.node_budget,
            });
        }
        visited[start] = true;
        path.push(start);
        run.push(1);
        cursor.push(0);
        if path.len() > best.len() {
            best.clone_from(&path);
        }

        while let Some(&v) = path.last() {
            let depth = path.len();
            let neighbors = g.neighbors(v);
            let mut chosen = None;
            while cursor[depth - 1] < neighbors.len() {
                let w = neighbors[cursor[depth - 1]];
                cursor[depth - 1] += 1;
                if visited[w] || degree[w] < degree[v] {
                    continue;
                }
                let w_run = if degree[w] == degree[v] {
                    run[depth - 1] + 1
                } else {
                    1
                };
                let c = classes.component[w];
                let bound = depth + 1 + (classes.size[c] - w_run) + classes.exit[c];
                if bound <= best.len() {
                    continue;
                }
                chosen = Some((w, w_run));
                break;
            }
            match chosen {
                Some((w, w_run)) => {
                    expansions += 1;
                    if expansions > limits.node_budget {
                        return Err(SolveError::BudgetExceeded {
                            budget: limits.node_budget,
                        });
                    }
                    visited[w] = true;
                    path.push(w);
                    run.push(w_run);
                    cursor.push(0);
                    if path.len() > best.len() {
                        best.clone_from(&path);
                        if best.len() >= ceiling {
                            break 'starts;
                        }
                    }
                }
                None => {
                    visited[v] = false;
                    path.pop();
                    run.pop();
                    cursor.pop();
                }
            }
        }
    }

    Ok(MpResult {
        value: best.len(),
        witness: MonotonePath {
            vertices: to_ids(&best),
            direction: Direction::NonDecreasing,
        },
        method: Method::BranchAndBound,
    })
}

/// Exact mp(G): the vertex count of a longest degree-monotone path.
///
/// Uses the DAG fast path when it applies, otherwise branch and bound.
/// Exceeding `limits` is an error; the value returned is never approximate.
pub fn mp_exact(g: &Graph, limits: SearchLimits) -> Result<MpResult, SolveError> {
    if g.n() == 0 {
        return Err(SolveError::Empty);
    }
    match mp_dag_fast_path(g) {
        Some(result) => Ok(result),
        None => mp_branch_and_bound(g, limits),
    }
}

/// [`mp_exact`] with default limits, returning only the value.
pub fn mp(g: &Graph) -> Result<usize, SolveError> {
    mp_exact(g, SearchLimits::default()).map(|r| r.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn ids(v: &[usize]) -> Vec<VertexId> {
        to_ids(v)
    }

    fn exact(g: &Graph) -> MpResult {
        mp_exact(g, SearchLimits::default()).unwrap()
    }

    #[test]
    fn is_degree_monotone_examples() {
        let p4 = path(4);
        assert_eq!(is_degree_monotone(&p4, &ids(&[0, 1, 2])), Ok(true));
        assert_eq!(is_degree_monotone(&p4, &ids(&[0, 1, 2, 3])), Ok(false));
        assert_eq!(is_degree_monotone(&p4, &ids(&[3])), Ok(true));
        assert_eq!(is_degree_monotone(&p4, &ids(&[0, 2])), Ok(false));
        assert_eq!(
            is_degree_monotone(&p4, &ids(&[0, 1, 0])),
            Err(GraphError::DuplicateVertex(0))
        );
        assert!(is_degree_monotone(&p4, &ids(&[4])).is_err());
    }

    #[test]
    fn point_values() {
        for n in 3..=9 {
            assert_eq!(exact(&path(n)).value, n - 1, "P_{n}");
        }
        for n in 1..=8 {
            assert_eq!(exact(&complete(n)).value, n, "K_{n}");
        }
        for n in 1..=5 {
            assert_eq!(exact(&complete_bipartite(n, n + 1)).value, 2);
        }
        assert_eq!(exact(&cycle(6)).value, 6);
        assert_eq!(exact(&Graph::empty(5)).value, 1);
        assert_eq!(exact(&Graph::empty(1)).value, 1);
        assert_eq!(exact(&star(3)).value, 2);
    }

    #[test]
    fn empty_graph_is_rejected() {
        assert_eq!(
            mp_exact(&Graph::empty(0), SearchLimits::default()),
            Err(SolveError::Empty)
        );
    }

    #[test]
    fn budget_is_an_error_not_an_approximation() {
        let tiny = SearchLimits { node_budget: 3 };
        assert_eq!(
            mp_exact(&complete(6), tiny),
            Err(SolveError::BudgetExceeded { budget: 3 })
        );
    }

    #[test]
    fn fast_path_applicability() {
        assert!(mp_dag_fast_path(&path(4)).is_none());
        let star3 = mp_dag_fast_path(&star(3)).unwrap();
        assert_eq!(star3.value, 2);
        assert_eq!(star3.method, Method::DagFastPath);
        // Lowest (degree, id) start wins the tie among equally long paths.
        assert_eq!(star3.witness.vertices(), &ids(&[1, 0])[..]);
    }

    #[test]
    fn witness_is_deterministic_and_valid() {
        let g = cycle(6);
        let a = exact(&g);
        let b = exact(&g);
        assert_eq!(a, b);
        assert_eq!(a.witness.vertices(), &ids(&[0, 1, 2, 3, 4, 5])[..]);
        assert_eq!(a.method, Method::BranchAndBound);
        let rev = a.witness.reversed();
        assert_eq!(rev.direction(), Direction::NonIncreasing);
        assert!(MonotonePath::new(&g, rev.vertices().to_vec(), Direction::NonIncreasing).is_ok());
    }

    #[test]
    fn monotone_path_validation() {
        let p4 = path(4);
        assert_eq!(
            MonotonePath::new(&p4, ids(&[0, 1, 2, 3]), Direction::NonDecreasing),
            Err(InvalidPath::NotMonotone(Direction::NonDecreasing))
        );
        assert_eq!(
            MonotonePath::new(&p4, ids(&[0, 2]), Direction::NonDecreasing),
            Err(InvalidPath::NotAPath)
        );
        assert!(MonotonePath::new(&p4, ids(&[2, 1, 0]), Direction::NonIncreasing).is_ok());
    }

    #[test]
    fn limits_from_env_default() {
        // The variable is not set in the test environment.
        if std::env::var(NODE_BUDGET_ENV).is_err() {
            assert_eq!(SearchLimits::from_env(), Ok(SearchLimits::default()));
        }
    }
}

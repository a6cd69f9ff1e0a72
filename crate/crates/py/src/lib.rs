//! Python bindings for `dmp_core`.

use dmp_core::bounds::{self, BoundCheckRecord, TheoremId};
use dmp_core::campaign::{self, CampaignConfig, CampaignSummary, RandomModel, TargetPolicy};
use dmp_core::constructions::{self, ConstructionInstance, FamilyId, Params};
use dmp_core::format;
use dmp_core::graph::{Edge, Graph, VertexId};
use dmp_core::ops;
use dmp_core::oracle;
use dmp_core::solver::{self, SearchLimits, SolveError};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(dmp, BudgetExceeded, PyException, "Solver node budget exhausted.");

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn solve_error(e: SolveError) -> PyErr {
    match e {
        SolveError::BudgetExceeded { .. } => BudgetExceeded::new_err(e.to_string()),
        SolveError::Empty => value_error(e),
    }
}

fn limits(node_budget: Option<u64>) -> PyResult<SearchLimits> {
    match node_budget {
        Some(node_budget) => Ok(SearchLimits { node_budget }),
        None => SearchLimits::from_env().map_err(value_error),
    }
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "dmp", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: Graph,
}

impl From<Graph> for PyGraph {
    fn from(inner: Graph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Graph::from_edge_list(n, &edges).map(Into::into).map_err(value_error)
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        format::parse_edge_list(text).map(Into::into).map_err(value_error)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        format::parse_json(text).map(Into::into).map_err(value_error)
    }

    fn to_edge_list(&self) -> String {
        format::to_edge_list(&self.inner)
    }

    fn to_json(&self) -> String {
        format::to_json(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edge_pairs()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn degree_sequence(&self) -> Vec<usize> {
        self.inner.degree_sequence()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.check_vertex(VertexId(v)).map_err(value_error)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn is_triangle_free(&self) -> bool {
        self.inner.is_triangle_free()
    }

    fn is_connected(&self) -> PyResult<bool> {
        self.inner.is_connected().map_err(value_error)
    }

    fn is_tree(&self) -> bool {
        self.inner.is_tree()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

fn edge(u: usize, v: usize) -> PyResult<Edge> {
    Edge::new(u, v).map_err(value_error)
}

/// An operation with its target, applied with `apply(graph)`.
#[pyclass(name = "Operation", module = "dmp", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyOperation {
    inner: ops::Operation,
}

#[pymethods]
impl PyOperation {
    #[staticmethod]
    fn add_edge(u: usize, v: usize) -> PyResult<Self> {
        Ok(ops::Operation::AddEdge(edge(u, v)?).into())
    }

    #[staticmethod]
    fn delete_edge(u: usize, v: usize) -> PyResult<Self> {
        Ok(ops::Operation::DeleteEdge(edge(u, v)?).into())
    }

    #[staticmethod]
    fn subdivide(u: usize, v: usize) -> PyResult<Self> {
        Ok(ops::Operation::Subdivide(edge(u, v)?).into())
    }

    #[staticmethod]
    fn contract(u: usize, v: usize) -> PyResult<Self> {
        Ok(ops::Operation::Contract(edge(u, v)?).into())
    }

    #[staticmethod]
    fn add_vertex(neighbors: Vec<usize>) -> Self {
        ops::Operation::AddVertex(neighbors.into_iter().map(VertexId).collect()).into()
    }

    #[staticmethod]
    fn delete_vertex(v: usize) -> Self {
        ops::Operation::DeleteVertex(VertexId(v)).into()
    }

    #[staticmethod]
    fn cartesian_product(partner: &PyGraph) -> Self {
        ops::Operation::CartesianProduct(partner.inner.clone()).into()
    }

    #[staticmethod]
    fn join(partner: &PyGraph) -> Self {
        ops::Operation::Join(partner.inner.clone()).into()
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind().name()
    }

    #[getter]
    fn target(&self) -> String {
        self.inner.target_label()
    }

    fn apply(&self, graph: &PyGraph) -> PyResult<PyGraph> {
        self.inner
            .apply(&graph.inner)
            .map(|a| a.after.into())
            .map_err(value_error)
    }

    /// Old id -> new id (or None) for contraction and vertex deletion.
    fn id_map(&self, graph: &PyGraph) -> PyResult<Option<Vec<Option<usize>>>> {
        let app = self.inner.apply(&graph.inner).map_err(value_error)?;
        Ok(app
            .id_map
            .map(|m| m.as_slice().iter().map(|v| v.map(|v| v.0)).collect()))
    }

    fn __repr__(&self) -> String {
        format!("Operation({}, {})", self.kind(), self.target())
    }
}

impl From<ops::Operation> for PyOperation {
    fn from(inner: ops::Operation) -> Self {
        PyOperation { inner }
    }
}

/// A generated family member with its designated operation and claims.
#[pyclass(name = "Construction", module = "dmp", frozen)]
struct PyConstruction {
    inner: ConstructionInstance,
}

#[pymethods]
impl PyConstruction {
    #[getter]
    fn family(&self) -> &'static str {
        self.inner.family.name()
    }

    #[getter]
    fn params(&self) -> Params {
        self.inner.params.clone()
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        self.inner.graph.clone().into()
    }

    #[getter]
    fn operation(&self) -> PyOperation {
        self.inner.operation.clone().into()
    }

    #[getter]
    fn claimed_mp_before(&self) -> usize {
        self.inner.claimed_mp_before
    }

    #[getter]
    fn claimed_mp_after(&self) -> usize {
        self.inner.claimed_mp_after
    }

    #[getter]
    fn claimed_mp_partner(&self) -> Option<usize> {
        self.inner.claimed_mp_partner
    }

    fn __repr__(&self) -> String {
        let params: Vec<String> = self.inner.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("Construction({}, {})", self.family(), params.join(", "))
    }
}

/// Length (vertex count) of a longest degree-monotone path.
#[pyfunction]
#[pyo3(signature = (graph, node_budget = None))]
fn mp(graph: &PyGraph, node_budget: Option<u64>) -> PyResult<usize> {
    Ok(solver::mp_exact(&graph.inner, limits(node_budget)?)
        .map_err(solve_error)?
        .value)
}

/// `(value, witness, direction, method)`.
#[pyfunction]
#[pyo3(signature = (graph, node_budget = None))]
fn mp_witness(graph: &PyGraph, node_budget: Option<u64>) -> PyResult<(usize, Vec<usize>, String, String)> {
    let r = solver::mp_exact(&graph.inner, limits(node_budget)?).map_err(solve_error)?;
    let path = r.witness.vertices().iter().map(|v| v.0).collect();
    Ok((r.value, path, r.witness.direction().to_string(), r.method.to_string()))
}

#[pyfunction]
#[pyo3(signature = (graph, max_n = oracle::DEFAULT_ORACLE_MAX_N))]
fn mp_oracle(graph: &PyGraph, max_n: usize) -> PyResult<usize> {
    oracle::mp_oracle(&graph.inner, max_n).map_err(value_error)
}

#[pyfunction]
fn is_degree_monotone(graph: &PyGraph, path: Vec<usize>) -> PyResult<bool> {
    let ids: Vec<VertexId> = path.into_iter().map(VertexId).collect();
    solver::is_degree_monotone(&graph.inner, &ids).map_err(value_error)
}

#[pyfunction]
fn list_families() -> Vec<&'static str> {
    constructions::list_families().iter().map(|f| f.name).collect()
}

#[pyfunction]
fn list_theorems() -> Vec<&'static str> {
    bounds::theorems().iter().map(|t| t.name).collect()
}

/// `construct("g1_plus", k=4)`; omitted parameters take their defaults.
#[pyfunction]
#[pyo3(signature = (family, **params))]
fn construct(family: &str, params: Option<Params>) -> PyResult<PyConstruction> {
    let family: FamilyId = family.parse().map_err(value_error)?;
    constructions::generate(family, &params.unwrap_or_default())
        .map(|inner| PyConstruction { inner })
        .map_err(value_error)
}

fn record_dict<'py>(py: Python<'py>, r: &BoundCheckRecord) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("theorem", r.theorem.name())?;
    d.set_item("seed", r.seed)?;
    d.set_item("trial", r.trial)?;
    d.set_item("n", r.n)?;
    d.set_item("m", r.m)?;
    d.set_item("target", &r.target)?;
    d.set_item("mp_before", r.mp_before)?;
    d.set_item("mp_after", r.mp_after)?;
    d.set_item("lower", r.lower.to_string())?;
    d.set_item("upper", r.upper.to_string())?;
    d.set_item("pass", r.pass)?;
    d.set_item("tight_low", r.tight_low)?;
    d.set_item("tight_high", r.tight_high)?;
    Ok(d)
}

fn summary_dict<'py>(py: Python<'py>, s: &CampaignSummary) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("trials", s.trials)?;
    d.set_item("skipped", s.skipped)?;
    d.set_item("checked", s.checked)?;
    d.set_item("passed", s.passed)?;
    d.set_item("failed", s.failed)?;
    d.set_item("tight_low", s.tight_low)?;
    d.set_item("tight_high", s.tight_high)?;
    let show = |x: &Option<bounds::Rational>| x.map(|r| r.to_string());
    d.set_item("min_slack_low", show(&s.min_slack_low))?;
    d.set_item("max_slack_low", show(&s.max_slack_low))?;
    d.set_item("min_slack_high", show(&s.min_slack_high))?;
    d.set_item("max_slack_high", show(&s.max_slack_high))?;
    Ok(d)
}

/// Evaluates one theorem on `operation` applied to `graph`; returns the
/// record as a dict with bounds as exact fraction strings.
#[pyfunction]
#[pyo3(signature = (theorem, graph, operation, node_budget = None))]
fn check_bound<'py>(
    py: Python<'py>,
    theorem: &str,
    graph: &PyGraph,
    operation: &PyOperation,
    node_budget: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let id: TheoremId = theorem.parse().map_err(value_error)?;
    let r = bounds::check_bound(id.spec(), &graph.inner, &operation.inner, limits(node_budget)?).map_err(|e| match e {
        bounds::BoundError::Solve(s) => solve_error(s),
        other => value_error(other),
    })?;
    record_dict(py, &r)
}

#[pyfunction]
#[pyo3(signature = (model, seed, n = None, p = None, n1 = None, n2 = None))]
fn random_graph(
    model: &str,
    seed: u64,
    n: Option<usize>,
    p: Option<f64>,
    n1: Option<usize>,
    n2: Option<usize>,
) -> PyResult<PyGraph> {
    let model = parse_model(model, n, p, n1, n2)?;
    campaign::random_graph(&model, seed).map(Into::into).map_err(value_error)
}

fn parse_model(name: &str, n: Option<usize>, p: Option<f64>, n1: Option<usize>, n2: Option<usize>) -> PyResult<RandomModel> {
    let need = |x: Option<usize>, what: &str| x.ok_or_else(|| value_error(format!("model {name} needs {what}")));
    let need_p = || p.ok_or_else(|| value_error(format!("model {name} needs p")));
    Ok(match name {
        "gnp" => RandomModel::Gnp { n: need(n, "n")?, p: need_p()? },
        "random_tree" => RandomModel::RandomTree { n: need(n, "n")? },
        "random_bipartite" => RandomModel::RandomBipartite {
            n1: need(n1, "n1")?,
            n2: need(n2, "n2")?,
            p: need_p()?,
        },
        other => return Err(value_error(format!("unknown model `{other}`"))),
    })
}

/// Runs a seeded campaign; returns `(records, summary)`.
#[pyfunction]
#[pyo3(signature = (theorem, model, trials, seed, n = None, p = None, n1 = None, n2 = None, sample = None, jobs = None))]
#[allow(clippy::too_many_arguments)]
fn run_campaign<'py>(
    py: Python<'py>,
    theorem: &str,
    model: &str,
    trials: u64,
    seed: u64,
    n: Option<usize>,
    p: Option<f64>,
    n1: Option<usize>,
    n2: Option<usize>,
    sample: Option<usize>,
    jobs: Option<usize>,
) -> PyResult<(Vec<Bound<'py, PyDict>>, Bound<'py, PyDict>)> {
    let config = CampaignConfig {
        theorem: theorem.parse().map_err(value_error)?,
        model: parse_model(model, n, p, n1, n2)?,
        trials,
        seed,
        policy: sample.map_or(TargetPolicy::AllValid, TargetPolicy::Sampled),
        limits: limits(None)?,
        jobs,
    };
    let report = py
        .detach(|| campaign::run_campaign(&config))
        .map_err(|e| match e {
            campaign::CampaignError::Solve(s) => solve_error(s),
            other => value_error(other),
        })?;
    let records = report
        .records
        .iter()
        .map(|r| record_dict(py, r))
        .collect::<PyResult<_>>()?;
    Ok((records, summary_dict(py, &report.summary)?))
}

#[pymodule]
fn dmp(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyOperation>()?;
    m.add_class::<PyConstruction>()?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add_function(wrap_pyfunction!(mp, m)?)?;
    m.add_function(wrap_pyfunction!(mp_witness, m)?)?;
    m.add_function(wrap_pyfunction!(mp_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(is_degree_monotone, m)?)?;
    m.add_function(wrap_pyfunction!(list_families, m)?)?;
    m.add_function(wrap_pyfunction!(list_theorems, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(check_bound, m)?)?;
    m.add_function(wrap_pyfunction!(random_graph, m)?)?;
    m.add_function(wrap_pyfunction!(run_campaign, m)?)?;
    Ok(())
}

//! Seeded random verification campaigns over the bound theorems.
//!
//! Trial `t` draws from its own ChaCha stream (`seed`, stream `t`), so
//! trials are independent of scheduling and can run on a worker pool while
//! the merged record list stays byte-identical.

use std::fmt;
use std::io::Write;

use rand::distributions::WeightedIndex;
use rand::prelude::*;
use rand::seq::index;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::bounds::{check_admitted, BoundCheckRecord, BoundError, Rational, TheoremId, TheoremSpec};
use crate::constructions::{generate_with, list_families};
use crate::graph::{named, Edge, Graph, VertexId};
use crate::oracle::{mp_oracle, DEFAULT_ORACLE_MAX_N};
use crate::ops::Operation;
use crate::solver::{mp_exact, SearchLimits, SolveError};

pub const CSV_HEADER: [&str; 13] = [
    "theorem",
    "seed",
    "trial",
    "n",
    "m",
    "target",
    "mp_before",
    "mp_after",
    "lower",
    "upper",
    "pass",
    "tight_low",
    "tight_high",
];

/// Largest neighborhood drawn for general vertex addition.
pub const VERTEX_ADD_SIZE_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RandomModel {
    Gnp { n: usize, p: f64 },
    RandomTree { n: usize },
    RandomBipartite { n1: usize, n2: usize, p: f64 },
}

impl fmt::Display for RandomModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RandomModel::Gnp { n, p } => write!(f, "gnp({n}, {p})"),
            RandomModel::RandomTree { n } => write!(f, "random_tree({n})"),
            RandomModel::RandomBipartite { n1, n2, p } => {
                write!(f, "random_bipartite({n1}, {n2}, {p})")
            }
        }
    }
}

impl RandomModel {
    pub fn validate(&self) -> Result<(), CampaignError> {
        let bad = |msg: &str| Err(CampaignError::InvalidModel(format!("{self}: {msg}")));
        let p_ok = |p: f64| (0.0..=1.0).contains(&p);
        match *self {
            RandomModel::Gnp { n, p } => {
                if n == 0 {
                    return bad("n must be at least 1");
                }
                if !p_ok(p) {
                    return bad("p must lie in [0, 1]");
                }
            }
            RandomModel::RandomTree { n: 0 } => return bad("n must be at least 1"),
            RandomModel::RandomTree { .. } => {}
            RandomModel::RandomBipartite { n1, n2, p } => {
                if n1 + n2 == 0 {
                    return bad("n1 + n2 must be at least 1");
                }
                if !p_ok(p) {
                    return bad("p must lie in [0, 1]");
                }
            }
        }
        Ok(())
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> Graph {
        match *self {
            RandomModel::Gnp { n, p } => {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edge_list(n, &edges).expect("valid gnp sample")
            }
            RandomModel::RandomTree { n } => prufer_tree(n, rng),
            RandomModel::RandomBipartite { n1, n2, p } => {
                let mut edges = Vec::new();
                for u in 0..n1 {
                    for v in n1..n1 + n2 {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edge_list(n1 + n2, &edges).expect("valid bipartite sample")
            }
        }
    }
}

/// Uniform labeled tree via a random Prüfer sequence.
fn prufer_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        let edges: &[(usize, usize)] = if n == 2 { &[(0, 1)] } else { &[] };
        return Graph::from_edge_list(n, edges).expect("valid small tree");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = leaves.pop_first().expect("a Prüfer step always has a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    Graph::from_edge_list(n, &edges).expect("valid Prüfer tree")
}

/// Deterministic sample from `model` for a fixed seed.
pub fn random_graph(model: &RandomModel, seed: u64) -> Result<Graph, CampaignError> {
    model.validate()?;
    Ok(model.sample(&mut ChaCha8Rng::seed_from_u64(seed)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetPolicy {
    /// Every valid target. For general vertex addition, `n` random
    /// neighborhoods.
    AllValid,
    /// Up to `j` targets drawn without replacement.
    Sampled(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignConfig {
    pub theorem: TheoremId,
    pub model: RandomModel,
    pub trials: u64,
    pub seed: u64,
    pub policy: TargetPolicy,
    pub limits: SearchLimits,
    /// Worker threads; `None` uses the machine's parallelism.
    pub jobs: Option<usize>,
}

impl CampaignConfig {
    pub fn new(theorem: TheoremId, model: RandomModel, trials: u64, seed: u64) -> Self {
        CampaignConfig {
            theorem,
            model,
            trials,
            seed,
            policy: TargetPolicy::AllValid,
            limits: SearchLimits::default(),
            jobs: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum CampaignError {
    #[error("invalid model {0}")]
    InvalidModel(String),
    #[error("{theorem} needs a random_tree model, got {model}")]
    Incompatible { theorem: TheoremId, model: String },
    #[error("trials must be at least 1")]
    NoTrials,
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error("worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CampaignSummary {
    pub trials: u64,
    pub skipped: u64,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub tight_low: u64,
    pub tight_high: u64,
    /// Over passing records: `mp_after - lower`.
    pub min_slack_low: Option<Rational>,
    pub max_slack_low: Option<Rational>,
    /// Over passing records: `upper - mp_after`.
    pub min_slack_high: Option<Rational>,
    pub max_slack_high: Option<Rational>,
}

fn widen(slot: &mut Option<Rational>, x: Rational, keep: fn(Rational, Rational) -> Rational) {
    *slot = Some(slot.map_or(x, |y| keep(x, y)));
}

impl CampaignSummary {
    fn add(&mut self, r: &BoundCheckRecord) {
        self.checked += 1;
        if !r.pass {
            self.failed += 1;
            return;
        }
        self.passed += 1;
        self.tight_low += r.tight_low as u64;
        self.tight_high += r.tight_high as u64;
        let value = Rational::from_integer(r.mp_after as u64);
        widen(&mut self.min_slack_low, value - r.lower, Ord::min);
        widen(&mut self.max_slack_low, value - r.lower, Ord::max);
        widen(&mut self.min_slack_high, r.upper - value, Ord::min);
        widen(&mut self.max_slack_high, r.upper - value, Ord::max);
    }
}

impl fmt::Display for CampaignSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |x: &Option<Rational>| x.map_or("-".to_string(), |r| r.to_string());
        write!(
            f,
            "trials={} skipped={} checked={} passed={} failed={} tight_low={} tight_high={} \
             slack_low=[{}, {}] slack_high=[{}, {}]",
            self.trials,
            self.skipped,
            self.checked,
            self.passed,
            self.failed,
            self.tight_low,
            self.tight_high,
            show(&self.min_slack_low),
            show(&self.max_slack_low),
            show(&self.min_slack_high),
            show(&self.max_slack_high),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignReport {
    pub records: Vec<BoundCheckRecord>,
    pub summary: CampaignSummary,
}

impl CampaignReport {
    pub fn failures(&self) -> impl Iterator<Item = &BoundCheckRecord> {
        self.records.iter().filter(|r| !r.pass)
    }
}

fn pick<R: Rng, T>(rng: &mut R, mut all: Vec<T>, policy: TargetPolicy) -> Vec<T> {
    match policy {
        TargetPolicy::Sampled(j) if j < all.len() => {
            let mut chosen = index::sample(rng, all.len(), j).into_vec();
            chosen.sort_unstable();
            let mut slots: Vec<Option<T>> = all.drain(..).map(Some).collect();
            chosen
                .into_iter()
                .map(|i| slots[i].take().expect("indices are distinct"))
                .collect()
        }
        _ => all,
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Uniform over nonempty subsets of size at most the cap.
fn random_neighborhood<R: Rng>(rng: &mut R, n: usize) -> Vec<VertexId> {
    let cap = n.min(VERTEX_ADD_SIZE_CAP);
    let weights: Vec<f64> = (1..=cap).map(|s| binomial(n, s)).collect();
    let size = 1 + WeightedIndex::new(&weights)
        .expect("positive weights")
        .sample(rng);
    let mut ids = index::sample(rng, n, size).into_vec();
    ids.sort_unstable();
    ids.into_iter().map(VertexId).collect()
}

fn targets<R: Rng>(
    theorem: TheoremId,
    g: &Graph,
    partner: Option<&Graph>,
    policy: TargetPolicy,
    rng: &mut R,
) -> Vec<Operation> {
    let edges = || g.edges().collect::<Vec<Edge>>();
    let all = match theorem {
        TheoremId::EdgeAdd => {
            let mut missing = Vec::new();
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    if !g.has_edge(u, v) {
                        missing.push(Operation::AddEdge(Edge::new(u, v).expect("u < v")));
                    }
                }
            }
            missing
        }
        TheoremId::EdgeDelete => edges().into_iter().map(Operation::DeleteEdge).collect(),
        TheoremId::Subdivision => edges().into_iter().map(Operation::Subdivide).collect(),
        TheoremId::ContractionTriangleFree => {
            edges().into_iter().map(Operation::Contract).collect()
        }
        TheoremId::VertexAddGeneral => {
            let count = match policy {
                TargetPolicy::AllValid => g.n(),
                TargetPolicy::Sampled(j) => j,
            };
            return (0..count)
                .map(|_| Operation::AddVertex(random_neighborhood(rng, g.n())))
                .collect();
        }
        TheoremId::VertexDeleteGeneral => (0..g.n())
            .map(|v| Operation::DeleteVertex(VertexId(v)))
            .collect(),
        TheoremId::TreeLeafAdd => (0..g.n())
            .map(|v| Operation::AddVertex(vec![VertexId(v)]))
            .collect(),
        TheoremId::TreeLeafDelete => (0..g.n())
            .filter(|&v| g.neighbors(v).len() == 1)
            .map(|v| Operation::DeleteVertex(VertexId(v)))
            .collect(),
        TheoremId::CartesianProduct => {
            vec![Operation::CartesianProduct(partner.expect("binary").clone())]
        }
        TheoremId::Join => vec![Operation::Join(partner.expect("binary").clone())],
    };
    pick(rng, all, policy)
}

struct TrialOutcome {
    records: Vec<BoundCheckRecord>,
}

fn is_binary(theorem: TheoremId) -> bool {
    matches!(theorem, TheoremId::CartesianProduct | TheoremId::Join)
}

fn run_trial(config: &CampaignConfig, spec: &TheoremSpec, trial: u64) -> Result<TrialOutcome, CampaignError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(trial);
    let g = config.model.sample(&mut rng);
    let partner = is_binary(config.theorem).then(|| config.model.sample(&mut rng));
    let ops: Vec<Operation> = targets(config.theorem, &g, partner.as_ref(), config.policy, &mut rng)
        .into_iter()
        .filter(|op| spec.admits(&g, op).is_ok())
        .collect();
    if ops.is_empty() {
        return Ok(TrialOutcome { records: Vec::new() });
    }
    let mp_before = mp_exact(&g, config.limits)?.value;
    let mut records = Vec::with_capacity(ops.len());
    for op in &ops {
        let mut r = check_admitted(spec, &g, mp_before, op, config.limits)?;
        r.seed = config.seed;
        r.trial = trial;
        records.push(r);
    }
    Ok(TrialOutcome { records })
}

pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport, CampaignError> {
    if config.trials == 0 {
        return Err(CampaignError::NoTrials);
    }
    config.model.validate()?;
    let needs_tree = matches!(config.theorem, TheoremId::TreeLeafAdd | TheoremId::TreeLeafDelete);
    if needs_tree && !matches!(config.model, RandomModel::RandomTree { .. }) {
        return Err(CampaignError::Incompatible {
            theorem: config.theorem,
            model: config.model.to_string(),
        });
    }
    let spec = config.theorem.spec();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = config.jobs {
        pool = pool.num_threads(jobs.max(1));
    }
    let pool = pool.build().map_err(|e| CampaignError::Pool(e.to_string()))?;
    let outcomes: Vec<Result<TrialOutcome, CampaignError>> = pool.install(|| {
        (0..config.trials)
            .into_par_iter()
            .map(|t| run_trial(config, spec, t))
            .collect()
    });

    let mut summary = CampaignSummary {
        trials: config.trials,
        ..CampaignSummary::default()
    };
    let mut records = Vec::new();
    for outcome in outcomes {
        let outcome = outcome?;
        if outcome.records.is_empty() {
            summary.skipped += 1;
        }
        for r in &outcome.records {
            summary.add(r);
        }
        records.extend(outcome.records);
    }
    Ok(CampaignReport { records, summary })
}

pub fn write_csv<W: Write>(records: &[BoundCheckRecord], out: W) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(records: &[BoundCheckRecord], mut out: W) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut out, records)?;
    out.write_all(b"\n")
}

/// Exhaustive graphs are enumerated up to this order.
pub const EXHAUSTIVE_MAX_N: usize = 5;

/// Named graphs, every labeled graph up to [`EXHAUSTIVE_MAX_N`] vertices,
/// and each construction (before and after its operation) with at most
/// `max_n` vertices.
pub fn oracle_catalog(max_n: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(EXHAUSTIVE_MAX_N) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Graph::from_edge_list(n, &edges).expect("valid subset");
            out.push((format!("labeled(n={n},mask={mask})"), g));
        }
    }
    for n in 1..=max_n {
        out.push((format!("path({n})"), named::path(n)));
        out.push((format!("complete({n})"), named::complete(n)));
        if n >= 3 {
            out.push((format!("cycle({n})"), named::cycle(n)));
        }
        if n >= 2 {
            out.push((format!("star({})", n - 1), named::star(n - 1)));
        }
        for a in 1..n {
            if a <= n - a {
                out.push((format!("complete_bipartite({a},{})", n - a), named::complete_bipartite(a, n - a)));
            }
        }
    }
    for info in list_families() {
        let p = info.primary_param();
        // some families keep the base graph fixed and grow only the partner
        for value in p.min..p.min + 32 {
            let Ok(inst) = generate_with(info.family, p.name, value) else {
                break;
            };
            if inst.graph.n() > max_n {
                break;
            }
            let label = format!("{}({}={value})", info.name, p.name);
            if let Some(h) = inst.operation.partner().filter(|h| h.n() <= max_n) {
                out.push((format!("{label}.partner"), h.clone()));
            }
            if let Ok(app) = inst.operation.apply(&inst.graph) {
                if app.after.n() <= max_n {
                    out.push((format!("{label}.after"), app.after));
                }
            }
            out.push((label, inst.graph));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleMismatch {
    pub label: String,
    pub exact: usize,
    pub oracle: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OracleCheckReport {
    pub graphs: usize,
    pub mismatches: Vec<OracleMismatch>,
}

/// Compares the exact solver against the brute-force oracle on the catalog
/// plus `trials` seeded gnp graphs with 1..=max_n vertices.
pub fn oracle_check(max_n: usize, trials: u64, seed: u64, limits: SearchLimits) -> Result<OracleCheckReport, CampaignError> {
    if max_n == 0 || max_n > DEFAULT_ORACLE_MAX_N {
        return Err(CampaignError::InvalidModel(format!(
            "max-n must lie in 1..={DEFAULT_ORACLE_MAX_N}, got {max_n}"
        )));
    }
    let mut graphs = oracle_catalog(max_n);
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t);
        let n = rng.gen_range(1..=max_n);
        let p = rng.gen_range(0.1..0.9);
        graphs.push((format!("gnp(n={n},trial={t})"), RandomModel::Gnp { n, p }.sample(&mut rng)));
    }
    let mut report = OracleCheckReport {
        graphs: graphs.len(),
        mismatches: Vec::new(),
    };
    for (label, g) in graphs {
        let exact = mp_exact(&g, limits)?.value;
        let oracle = mp_oracle(&g, max_n).expect("catalog respects max_n");
        if exact != oracle {
            report.mismatches.push(OracleMismatch { label, exact, oracle });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_graph_extremes() {
        for seed in 0..5 {
            let g = random_graph(&RandomModel::Gnp { n: 5, p: 0.0 }, seed).unwrap();
            assert_eq!(g, Graph::empty(5));
            let k = random_graph(&RandomModel::Gnp { n: 4, p: 1.0 }, seed).unwrap();
            assert_eq!(k, named::complete(4));
        }
        let b = random_graph(&RandomModel::RandomBipartite { n1: 3, n2: 4, p: 1.0 }, 3).unwrap();
        assert_eq!(b, named::complete_bipartite(3, 4));
    }

    #[test]
    fn random_trees_are_trees() {
        for n in 1..30 {
            for seed in 0..10 {
                let t = random_graph(&RandomModel::RandomTree { n }, seed).unwrap();
                assert!(t.is_tree(), "n={n} seed={seed}");
                assert_eq!(t.edge_count(), n - 1);
            }
        }
    }

    #[test]
    fn random_graph_is_deterministic() {
        let m = RandomModel::Gnp { n: 12, p: 0.4 };
        assert_eq!(random_graph(&m, 9).unwrap(), random_graph(&m, 9).unwrap());
        assert_ne!(random_graph(&m, 9).unwrap(), random_graph(&m, 10).unwrap());
    }

    #[test]
    fn invalid_models() {
        for m in [
            RandomModel::Gnp { n: 0, p: 0.5 },
            RandomModel::Gnp { n: 3, p: 1.5 },
            RandomModel::RandomTree { n: 0 },
            RandomModel::RandomBipartite { n1: 2, n2: 2, p: -0.1 },
        ] {
            assert!(matches!(random_graph(&m, 0), Err(CampaignError::InvalidModel(_))));
        }
    }

    #[test]
    fn tree_theorems_need_tree_models() {
        let config = CampaignConfig::new(TheoremId::TreeLeafAdd, RandomModel::Gnp { n: 5, p: 0.5 }, 3, 1);
        assert!(matches!(run_campaign(&config), Err(CampaignError::Incompatible { .. })));
        let mut zero = config.clone();
        zero.trials = 0;
        assert!(matches!(run_campaign(&zero), Err(CampaignError::NoTrials)));
    }

    #[test]
    fn neighborhoods_respect_the_cap() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let ns = random_neighborhood(&mut rng, 20);
            assert!((1..=VERTEX_ADD_SIZE_CAP).contains(&ns.len()));
            assert!(ns.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn sampled_policy_limits_targets() {
        let config = CampaignConfig {
            policy: TargetPolicy::Sampled(2),
            ..CampaignConfig::new(TheoremId::EdgeDelete, RandomModel::Gnp { n: 8, p: 0.6 }, 10, 4)
        };
        let report = run_campaign(&config).unwrap();
        let mut per_trial = std::collections::BTreeMap::new();
        for r in &report.records {
            *per_trial.entry(r.trial).or_insert(0) += 1;
        }
        assert!(per_trial.values().all(|&c| c <= 2));
        assert_eq!(report.summary.failed, 0);
    }

    #[test]
    fn oracle_check_small() {
        let r = oracle_check(6, 50, 3, SearchLimits::default()).unwrap();
        assert!(r.graphs > 1000);
        assert_eq!(r.mismatches, vec![]);
        assert!(oracle_check(13, 0, 0, SearchLimits::default()).is_err());
    }

    #[test]
    fn csv_header_is_exact() {
        let mut buf = Vec::new();
        write_csv(&[], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "theorem,seed,trial,n,m,target,mp_before,mp_after,lower,upper,pass,tight_low,tight_high\n"
        );
    }
}

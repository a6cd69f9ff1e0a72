//! `dmp` command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input or flags, 2 verification
//! mismatch or bound violation, 3 solver budget exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bounds::{check_admitted, theorems, BoundError, TheoremId};
use crate::campaign::{
    oracle_check, run_campaign, write_csv, write_json, CampaignConfig, CampaignError, RandomModel,
    TargetPolicy,
};
use crate::constructions::{generate, list_families, ConstructionError, FamilyId, Params};
use crate::format::{self, GraphFormat};
use crate::graph::{Edge, Graph, VertexId};
use crate::ops::{Operation, OperationKind};
use crate::solver::{mp_exact, SearchLimits, SolveError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "dmp", version, about = "Longest degree-monotone paths and their behavior under graph operations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute mp(G) for a graph file.
    Mp(MpArgs),
    /// Apply an operation and compare mp before and after.
    Op(OpArgs),
    /// Generate a named extremal construction.
    Construct(ConstructArgs),
    /// Run a randomized bound-verification campaign.
    Verify(VerifyArgs),
    /// Cross-check the exact solver against brute force.
    OracleCheck(OracleCheckArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    EdgeList,
    Json,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::EdgeList => GraphFormat::EdgeList,
            FormatArg::Json => GraphFormat::Json,
        }
    }
}

#[derive(Debug, Args)]
struct MpArgs {
    input: PathBuf,
    /// Input format; inferred from the extension when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Also print a longest path and its direction.
    #[arg(long)]
    witness: bool,
}

#[derive(Debug, Args)]
struct OpArgs {
    input: PathBuf,
    #[arg(long, value_parser = parse_kind)]
    op: OperationKind,
    #[arg(long)]
    u: Option<usize>,
    #[arg(long)]
    v: Option<usize>,
    /// Vertex to delete.
    #[arg(long)]
    vertex: Option<usize>,
    /// Neighbors of the added vertex.
    #[arg(long, value_delimiter = ',')]
    neighbors: Vec<usize>,
    /// Second operand for cartesian and join.
    #[arg(long)]
    partner: Option<PathBuf>,
    /// Write the resulting graph here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(long, required_unless_present = "list")]
    family: Option<String>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    t: Option<u64>,
    #[arg(long)]
    s: Option<u64>,
    /// Write the graph here; without it the graph goes to stdout and the
    /// summary to stderr.
    #[arg(long)]
    out: Option<PathBuf>,
    /// List the available families.
    #[arg(long, conflicts_with = "family")]
    list: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModelArg {
    #[value(name = "gnp")]
    Gnp,
    #[value(name = "random_tree", alias = "random-tree")]
    RandomTree,
    #[value(name = "random_bipartite", alias = "random-bipartite")]
    RandomBipartite,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_theorem)]
    theorem: TheoremId,
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    n1: Option<usize>,
    #[arg(long)]
    n2: Option<usize>,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Check at most this many targets per trial.
    #[arg(long)]
    sample: Option<usize>,
    /// CSV report path.
    #[arg(long)]
    report: Option<PathBuf>,
    /// JSON report path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Worker threads; defaults to the machine's parallelism.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Debug, Args)]
struct OracleCheckArgs {
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_kind(s: &str) -> Result<OperationKind, String> {
    s.parse()
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse()
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Budget(SolveError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Budget(_) => EXIT_BUDGET,
            _ => EXIT_INPUT,
        }
    }
}

fn input(msg: impl ToString) -> CliError {
    CliError::Input(msg.to_string())
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExceeded { .. } => CliError::Budget(e),
            SolveError::Empty => input(e),
        }
    }
}

impl From<BoundError> for CliError {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::Solve(s) => s.into(),
            other => input(other),
        }
    }
}

impl From<CampaignError> for CliError {
    fn from(e: CampaignError) -> Self {
        match e {
            CampaignError::Solve(s) => s.into(),
            CampaignError::Bound(b) => b.into(),
            other => input(other),
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        input(e)
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = SearchLimits::from_env().map_err(input).and_then(|limits| match cli.command {
        Command::Mp(a) => cmd_mp(a, limits, out),
        Command::Op(a) => cmd_op(a, limits, out),
        Command::Construct(a) => cmd_construct(a, out, err),
        Command::Verify(a) => cmd_verify(a, limits, out),
        Command::OracleCheck(a) => cmd_oracle_check(a, limits, out),
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn read_graph(path: &Path, format: Option<FormatArg>) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let format = format.map_or_else(|| GraphFormat::from_path(path), GraphFormat::from);
    format::parse(&text, format).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn write_graph(path: &Path, g: &Graph) -> Result<(), CliError> {
    fs::write(path, format::serialize(g, GraphFormat::from_path(path)))
        .map_err(|e| input(format!("{}: {e}", path.display())))
}

fn cmd_mp(a: MpArgs, limits: SearchLimits, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = read_graph(&a.input, a.format)?;
    let r = mp_exact(&g, limits)?;
    writeln!(out, "mp={}", r.value)?;
    if a.witness {
        let ids: Vec<String> = r.witness.vertices().iter().map(|v| v.to_string()).collect();
        writeln!(out, "witness={}", ids.join(","))?;
        writeln!(out, "direction={}", r.witness.direction())?;
    }
    Ok(EXIT_OK)
}

fn edge_target(a: &OpArgs) -> Result<Edge, CliError> {
    match (a.u, a.v) {
        (Some(u), Some(v)) => Edge::new(u, v).map_err(input),
        _ => Err(input(format!("--op {} needs --u and --v", a.op))),
    }
}

fn build_operation(a: &OpArgs) -> Result<Operation, CliError> {
    let partner = || match &a.partner {
        Some(p) => read_graph(p, None),
        None => Err(input(format!("--op {} needs --partner", a.op))),
    };
    Ok(match a.op {
        OperationKind::AddEdge => Operation::AddEdge(edge_target(a)?),
        OperationKind::DeleteEdge => Operation::DeleteEdge(edge_target(a)?),
        OperationKind::Subdivide => Operation::Subdivide(edge_target(a)?),
        OperationKind::Contract => Operation::Contract(edge_target(a)?),
        OperationKind::AddVertex => {
            if a.neighbors.is_empty() {
                return Err(input("--op add-vertex needs --neighbors"));
            }
            Operation::AddVertex(a.neighbors.iter().map(|&v| VertexId(v)).collect())
        }
        OperationKind::DeleteVertex => {
            let v = a.vertex.ok_or_else(|| input("--op delete-vertex needs --vertex"))?;
            Operation::DeleteVertex(VertexId(v))
        }
        OperationKind::CartesianProduct => Operation::CartesianProduct(partner()?),
        OperationKind::Join => Operation::Join(partner()?),
    })
}

fn cmd_op(a: OpArgs, limits: SearchLimits, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = read_graph(&a.input, a.format)?;
    let op = build_operation(&a)?;
    let app = op.apply(&g).map_err(input)?;
    let mp_before = mp_exact(&g, limits)?.value;
    let mp_after = mp_exact(&app.after, limits)?.value;
    if let Some(path) = &a.out {
        write_graph(path, &app.after)?;
    }
    writeln!(out, "mp_before={mp_before}")?;
    writeln!(out, "mp_after={mp_after}")?;
    let mut code = EXIT_OK;
    for spec in theorems().iter().filter(|t| t.operation == op.kind()) {
        match spec.admits(&g, &op) {
            Ok(()) => {
                let r = check_admitted(spec, &g, mp_before, &op, limits)?;
                let mut line = format!(
                    "{}: {} -> {}, bounds [{}, {}], {}",
                    spec.name,
                    r.mp_before,
                    r.mp_after,
                    r.lower,
                    r.upper,
                    if r.pass { "pass" } else { "FAIL" }
                );
                if r.tight_low {
                    line.push_str(", tight_low");
                }
                if r.tight_high {
                    line.push_str(", tight_high");
                }
                writeln!(out, "{line}")?;
                if !r.pass {
                    code = EXIT_MISMATCH;
                }
            }
            Err(BoundError::Precondition { reason, .. }) => {
                writeln!(out, "{}: not applicable ({reason})", spec.name)?;
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(code)
}

fn cmd_construct(a: ConstructArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    if a.list {
        for info in list_families() {
            let params: Vec<String> = info
                .params
                .iter()
                .map(|p| format!("{}>={} (default {})", p.name, p.min, p.default))
                .collect();
            let sharp = match (info.theorem, info.sharp) {
                (Some(t), Some(side)) => format!("{t} {side}"),
                (Some(t), None) => t.to_string(),
                _ => "-".to_string(),
            };
            writeln!(out, "{}\t{}\t{}\t{}", info.name, params.join(" "), sharp, info.summary)?;
        }
        return Ok(EXIT_OK);
    }
    let name = a.family.as_deref().expect("clap requires --family without --list");
    let family: FamilyId = name.parse()?;
    let mut params = Params::new();
    for (key, value) in [("k", a.k), ("n", a.n), ("m", a.m), ("t", a.t), ("s", a.s)] {
        if let Some(v) = value {
            params.insert(key.to_string(), v);
        }
    }
    let inst = generate(family, &params)?;
    let shown: Vec<String> = inst.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut summary = format!(
        "family={} {}\nn={} m={}\noperation={} {}\n",
        family,
        shown.join(" "),
        inst.graph.n(),
        inst.graph.edge_count(),
        inst.operation.kind(),
        inst.operation.target_label(),
    );
    if let Some(p) = inst.claimed_mp_partner {
        summary.push_str(&format!("partner_mp={p}\n"));
    }
    summary.push_str(&format!("claims {} -> {}\n", inst.claimed_mp_before, inst.claimed_mp_after));
    match &a.out {
        Some(path) => {
            write_graph(path, &inst.graph)?;
            out.write_all(summary.as_bytes())?;
        }
        None => {
            out.write_all(format::to_edge_list(&inst.graph).as_bytes())?;
            err.write_all(summary.as_bytes())?;
        }
    }
    Ok(EXIT_OK)
}

fn model(a: &VerifyArgs) -> Result<RandomModel, CliError> {
    let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| input(format!("--model needs --{flag}")));
    let need_p = || a.p.ok_or_else(|| input("--model needs --p"));
    Ok(match a.model {
        ModelArg::Gnp => RandomModel::Gnp {
            n: need(a.n, "n")?,
            p: need_p()?,
        },
        ModelArg::RandomTree => RandomModel::RandomTree { n: need(a.n, "n")? },
        ModelArg::RandomBipartite => RandomModel::RandomBipartite {
            n1: need(a.n1, "n1")?,
            n2: need(a.n2, "n2")?,
            p: need_p()?,
        },
    })
}

fn cmd_verify(a: VerifyArgs, limits: SearchLimits, out: &mut dyn Write) -> Result<i32, CliError> {
    let config = CampaignConfig {
        theorem: a.theorem,
        model: model(&a)?,
        trials: a.trials,
        seed: a.seed,
        policy: a.sample.map_or(TargetPolicy::AllValid, TargetPolicy::Sampled),
        limits,
        jobs: a.jobs,
    };
    let report = run_campaign(&config)?;
    if let Some(path) = &a.report {
        let file = fs::File::create(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
        write_csv(&report.records, io::BufWriter::new(file)).map_err(|e| input(format!("{}: {e}", path.display())))?;
    }
    if let Some(path) = &a.json {
        let file = fs::File::create(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
        write_json(&report.records, io::BufWriter::new(file))?;
    }
    writeln!(out, "theorem={} model={} seed={}", config.theorem, config.model, config.seed)?;
    writeln!(out, "{}", report.summary)?;
    for r in report.failures() {
        writeln!(
            out,
            "violation trial={} target={} mp {} -> {} outside [{}, {}]",
            r.trial, r.target, r.mp_before, r.mp_after, r.lower, r.upper
        )?;
    }
    Ok(if report.summary.failed > 0 { EXIT_MISMATCH } else { EXIT_OK })
}

fn cmd_oracle_check(a: OracleCheckArgs, limits: SearchLimits, out: &mut dyn Write) -> Result<i32, CliError> {
    let report = oracle_check(a.max_n, a.trials, a.seed, limits)?;
    for m in &report.mismatches {
        writeln!(out, "mismatch {}: exact={} oracle={}", m.label, m.exact, m.oracle)?;
    }
    writeln!(out, "graphs={}", report.graphs)?;
    writeln!(out, "mismatches={}", report.mismatches.len())?;
    Ok(if report.mismatches.is_empty() { EXIT_OK } else { EXIT_MISMATCH })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("dmp").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn flag_errors_exit_one() {
        assert_eq!(run_str(&[]).0, EXIT_INPUT);
        assert_eq!(run_str(&["mp"]).0, EXIT_INPUT);
        assert_eq!(run_str(&["construct", "--family", "path", "--bogus", "1"]).0, EXIT_INPUT);
        assert_eq!(run_str(&["oracle-check", "--max-n", "20"]).0, EXIT_INPUT);
        assert_eq!(run_str(&["construct", "--family", "nope"]).0, EXIT_INPUT);
        assert_eq!(run_str(&["construct", "--family", "g1_plus", "--n", "4"]).0, EXIT_INPUT);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("oracle-check"));
    }

    #[test]
    fn construct_to_stdout() {
        let (code, out, err) = run_str(&["construct", "--family", "path", "--n", "3"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "3 2\n0 1\n1 2\n");
        assert!(err.contains("claims 2 -> 3"));
    }

    #[test]
    fn construct_claims() {
        let (_, _, err) = run_str(&["construct", "--family", "k4_free", "--k", "2"]);
        assert!(err.contains("n=10"));
        assert!(err.contains("claims 4 -> 9"));
        let (_, _, err) = run_str(&["construct", "--family", "subdiv_lower", "--n", "8"]);
        assert!(err.contains("claims 7 -> 4"));
    }

    #[test]
    fn verify_needs_model_params() {
        let (code, _, err) = run_str(&["verify", "--theorem", "edge_add", "--model", "gnp", "--n", "5"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("--p"));
    }
}

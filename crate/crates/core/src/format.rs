//! Edge-list text and JSON encodings of [`Graph`].
//!
//! Edge list: a header line `n m`, then one `u v` line per edge with
//! `u < v`, lines in lexicographic order, single spaces, every line
//! newline-terminated. JSON: `{"n": 3, "edges": [[0,1],[1,2]]}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("invalid JSON graph: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Json,
}

impl GraphFormat {
    /// `.json` means JSON, everything else is an edge list.
    pub fn from_path(path: &std::path::Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => GraphFormat::Json,
            _ => GraphFormat::EdgeList,
        }
    }
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), ParseError> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let tok = fields
            .next()
            .ok_or_else(|| syntax(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| syntax(line_no, format!("{what} `{tok}` is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(syntax(line_no, "expected exactly two fields"));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_no, header) = lines.next().ok_or_else(|| syntax(1, "missing `n m` header"))?;
    let (n, m) = parse_pair(header_no, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(syntax(line_no, format!("more than the declared {m} edges")));
        }
        edges.push(parse_pair(line_no, line)?);
    }
    if edges.len() != m {
        return Err(syntax(
            header_no,
            format!("declared {m} edges but found {}", edges.len()),
        ));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

pub fn to_json(g: &Graph) -> String {
    let doc = JsonGraph {
        n: g.n(),
        edges: g.edges().map(|e| [e.u().0, e.v().0]).collect(),
    };
    serde_json::to_string(&doc).expect("graph JSON serialization cannot fail")
}

pub fn parse_json(text: &str) -> Result<Graph, ParseError> {
    let doc: JsonGraph = serde_json::from_str(text)?;
    let edges: Vec<_> = doc.edges.iter().map(|&[a, b]| (a, b)).collect();
    Ok(Graph::from_edge_list(doc.n, &edges)?)
}

pub fn serialize(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => to_edge_list(g),
        GraphFormat::Json => to_json(g),
    }
}

pub fn parse(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Json => parse_json(text),
    }
}

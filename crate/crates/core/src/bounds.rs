//! Machine-checkable bound theorems for mp under each operation.
//!
//! Bounds are exact rationals; nothing is rounded before comparison except
//! the subdivision lower bound, whose statement carries its own ceiling.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::ops::{Operation, OperationKind};
use crate::solver::{mp_exact, SearchLimits, SolveError};

pub type Rational = Ratio<u64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    EdgeAdd,
    EdgeDelete,
    Subdivision,
    ContractionTriangleFree,
    VertexAddGeneral,
    VertexDeleteGeneral,
    TreeLeafAdd,
    TreeLeafDelete,
    CartesianProduct,
    Join,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::EdgeAdd,
        TheoremId::EdgeDelete,
        TheoremId::Subdivision,
        TheoremId::ContractionTriangleFree,
        TheoremId::VertexAddGeneral,
        TheoremId::VertexDeleteGeneral,
        TheoremId::TreeLeafAdd,
        TheoremId::TreeLeafDelete,
        TheoremId::CartesianProduct,
        TheoremId::Join,
    ];

    pub fn name(self) -> &'static str {
        self.spec().name
    }

    pub fn spec(self) -> &'static TheoremSpec {
        &THEOREMS[self as usize]
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = TheoremId::ALL.iter().map(|t| t.name()).collect();
                format!("unknown theorem `{s}` (expected one of {})", names.join(", "))
            })
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundSide {
    Lower,
    Upper,
}

impl fmt::Display for BoundSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundSide::Lower => "lower",
            BoundSide::Upper => "upper",
        })
    }
}

/// Quantities a bound may depend on. Partner fields are zero for
/// single-graph operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BoundInputs {
    pub mp: u64,
    pub n: u64,
    pub mp_partner: u64,
    pub n_partner: u64,
}

pub struct TheoremSpec {
    pub id: TheoremId,
    pub name: &'static str,
    pub operation: OperationKind,
    pub statement: &'static str,
    pub lower: fn(&BoundInputs) -> Rational,
    pub upper: fn(&BoundInputs) -> Rational,
    /// Graph-level admissibility beyond the operation's own preconditions.
    pub precondition: fn(&Graph, &Operation) -> Result<(), String>,
}

impl fmt::Debug for TheoremSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TheoremSpec")
            .field("id", &self.id)
            .field("statement", &self.statement)
            .finish()
    }
}

fn int(x: u64) -> Rational {
    Rational::from_integer(x)
}

fn frac(num: u64, den: u64) -> Rational {
    Rational::new(num, den)
}

fn no_precondition(_: &Graph, _: &Operation) -> Result<(), String> {
    Ok(())
}

fn triangle_free(g: &Graph, _: &Operation) -> Result<(), String> {
    if g.is_triangle_free() {
        Ok(())
    } else {
        Err("graph contains a triangle".into())
    }
}

fn leaf_addition(g: &Graph, op: &Operation) -> Result<(), String> {
    if !g.is_tree() {
        return Err("graph is not a tree".into());
    }
    match op {
        Operation::AddVertex(ns) if ns.len() == 1 => Ok(()),
        _ => Err("new vertex must have exactly one neighbor to keep a tree".into()),
    }
}

fn leaf_deletion(g: &Graph, op: &Operation) -> Result<(), String> {
    if !g.is_tree() {
        return Err("graph is not a tree".into());
    }
    match op {
        Operation::DeleteVertex(v) if v.0 < g.n() && g.neighbors(v.0).len() == 1 => Ok(()),
        _ => Err("deleted vertex must be a leaf to keep a tree".into()),
    }
}

fn both_connected(g: &Graph, op: &Operation) -> Result<(), String> {
    let connected = |x: &Graph| x.is_connected().unwrap_or(false);
    match op.partner() {
        Some(h) if connected(g) && connected(h) => Ok(()),
        _ => Err("both factors must be connected".into()),
    }
}

static THEOREMS: [TheoremSpec; 10] = [
    TheoremSpec {
        id: TheoremId::EdgeAdd,
        name: "edge_add",
        operation: OperationKind::AddEdge,
        statement: "(mp(G)+1)/3 <= mp(G+e) <= 3 mp(G)",
        lower: |x| frac(x.mp + 1, 3),
        upper: |x| int(3 * x.mp),
        precondition: no_precondition,
    },
    TheoremSpec {
        id: TheoremId::EdgeDelete,
        name: "edge_delete",
        operation: OperationKind::DeleteEdge,
        statement: "mp(G)/3 <= mp(G-e) <= 3 mp(G) - 1",
        lower: |x| frac(x.mp, 3),
        upper: |x| int((3 * x.mp).saturating_sub(1)),
        precondition: no_precondition,
    },
    TheoremSpec {
        id: TheoremId::Subdivision,
        name: "subdivision",
        operation: OperationKind::Subdivide,
        statement: "ceil((mp(G)+1)/2) <= mp(G*) <= mp(G) + 1",
        lower: |x| int((x.mp + 1).div_ceil(2)),
        upper: |x| int(x.mp + 1),
        precondition: no_precondition,
    },
    TheoremSpec {
        id: TheoremId::ContractionTriangleFree,
        name: "contraction_triangle_free",
        operation: OperationKind::Contract,
        statement: "G triangle-free: mp(G)/3 <= mp(G.e) <= 2 mp(G)",
        lower: |x| frac(x.mp, 3),
        upper: |x| int(2 * x.mp),
        precondition: triangle_free,
    },
    TheoremSpec {
        id: TheoremId::VertexAddGeneral,
        name: "vertex_add_general",
        operation: OperationKind::AddVertex,
        statement: "2 <= mp(G+v) <= |V(G)| + 1",
        lower: |_| int(2),
        upper: |x| int(x.n + 1),
        precondition: no_precondition,
    },
    TheoremSpec {
        id: TheoremId::VertexDeleteGeneral,
        name: "vertex_delete_general",
        operation: OperationKind::DeleteVertex,
        statement: "1 <= mp(G-v) <= |V(G)| - 1",
        lower: |_| int(1),
        upper: |x| int(x.n.saturating_sub(1)),
        precondition: no_precondition,
    },
    TheoremSpec {
        id: TheoremId::TreeLeafAdd,
        name: "tree_leaf_add",
        operation: OperationKind::AddVertex,
        statement: "T, T+v trees: mp(T)/2 <= mp(T+v) <= 2 mp(T)",
        lower: |x| frac(x.mp, 2),
        upper: |x| int(2 * x.mp),
        precondition: leaf_addition,
    },
    TheoremSpec {
        id: TheoremId::TreeLeafDelete,
        name: "tree_leaf_delete",
        operation: OperationKind::DeleteVertex,
        statement: "T, T-v trees: mp(T)/2 <= mp(T-v) <= 2 mp(T)",
        lower: |x| frac(x.mp, 2),
        upper: |x| int(2 * x.mp),
        precondition: leaf_deletion,
    },
    TheoremSpec {
        id: TheoremId::CartesianProduct,
        name: "cartesian_product",
        operation: OperationKind::CartesianProduct,
        statement: "G, H connected: mp(G) + mp(H) - 1 <= mp(G box H) <= mp(G) mp(H)",
        lower: |x| int((x.mp + x.mp_partner).saturating_sub(1)),
        upper: |x| int(x.mp * x.mp_partner),
        precondition: both_connected,
    },
    TheoremSpec {
        id: TheoremId::Join,
        name: "join",
        operation: OperationKind::Join,
        statement: "mp(G) + mp(H) <= mp(G+H) <= |V(G)| + |V(H)|",
        lower: |x| int(x.mp + x.mp_partner),
        upper: |x| int(x.n + x.n_partner),
        precondition: no_precondition,
    },
];

pub fn theorems() -> &'static [TheoremSpec] {
    &THEOREMS
}

fn rational_str<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}

/// One verified instance. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheckRecord {
    pub theorem: TheoremId,
    pub seed: u64,
    pub trial: u64,
    pub n: usize,
    pub m: usize,
    pub target: String,
    pub mp_before: usize,
    pub mp_after: usize,
    #[serde(serialize_with = "rational_str")]
    pub lower: Rational,
    #[serde(serialize_with = "rational_str")]
    pub upper: Rational,
    pub pass: bool,
    pub tight_low: bool,
    pub tight_high: bool,
}

impl BoundCheckRecord {
    pub fn is_tight(&self, side: BoundSide) -> bool {
        match side {
            BoundSide::Lower => self.tight_low,
            BoundSide::Upper => self.tight_high,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("{theorem} applies to `{expected}` operations, got `{got}`")]
    WrongOperation {
        theorem: TheoremId,
        expected: OperationKind,
        got: OperationKind,
    },
    #[error("{theorem} precondition violated: {reason}")]
    Precondition { theorem: TheoremId, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

impl TheoremSpec {
    /// Checks operation kind and graph-level preconditions.
    pub fn admits(&self, g: &Graph, op: &Operation) -> Result<(), BoundError> {
        if op.kind() != self.operation {
            return Err(BoundError::WrongOperation {
                theorem: self.id,
                expected: self.operation,
                got: op.kind(),
            });
        }
        (self.precondition)(g, op).map_err(|reason| BoundError::Precondition {
            theorem: self.id,
            reason,
        })
    }

    pub fn interval(&self, inputs: &BoundInputs) -> (Rational, Rational) {
        ((self.lower)(inputs), (self.upper)(inputs))
    }
}

/// Applies `op`, solves both sides exactly and evaluates the theorem.
pub fn check_bound(
    spec: &TheoremSpec,
    g: &Graph,
    op: &Operation,
    limits: SearchLimits,
) -> Result<BoundCheckRecord, BoundError> {
    spec.admits(g, op)?;
    let mp_before = mp_exact(g, limits)?.value;
    check_admitted(spec, g, mp_before, op, limits)
}

/// As [`check_bound`] for an already admitted pair with known mp(G).
pub fn check_admitted(
    spec: &TheoremSpec,
    g: &Graph,
    mp_before: usize,
    op: &Operation,
    limits: SearchLimits,
) -> Result<BoundCheckRecord, BoundError> {
    let after = op.apply(g)?.after;
    let mp_after = mp_exact(&after, limits)?.value;
    let (mp_partner, n_partner) = match op.partner() {
        Some(h) => (mp_exact(h, limits)?.value as u64, h.n() as u64),
        None => (0, 0),
    };
    let inputs = BoundInputs {
        mp: mp_before as u64,
        n: g.n() as u64,
        mp_partner,
        n_partner,
    };
    let (lower, upper) = spec.interval(&inputs);
    let value = int(mp_after as u64);
    Ok(BoundCheckRecord {
        theorem: spec.id,
        seed: 0,
        trial: 0,
        n: g.n(),
        m: g.edge_count(),
        target: op.target_label(),
        mp_before,
        mp_after,
        lower,
        upper,
        pass: lower <= value && value <= upper,
        tight_low: value == lower,
        tight_high: value == upper,
    })
}

/// Theorems whose operation kind matches `op` and whose preconditions hold.
pub fn applicable_theorems(g: &Graph, op: &Operation) -> Vec<&'static TheoremSpec> {
    THEOREMS.iter().filter(|t| t.admits(g, op).is_ok()).collect()
}

//! Generators for the extremal families that show each bound is attained.
//!
//! Labeling convention for every family: spine (path) vertices first in
//! path order, then leaves hanging off the spine in spine order, then any
//! auxiliary vertices. Docs below use 1-based spine names `v_i`, which
//! have id `i - 1`.
//!
//! The claimed values are closed-form formulas in the family parameters.
//! They are never fed back from the solver; tests compare the two.

// Spine loops index by the 1-based subscripts used in the docs.
#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bounds::{BoundSide, TheoremId};
use crate::graph::{named, Edge, Graph, VertexId};
use crate::ops::Operation;

pub type Params = BTreeMap<String, u64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    G1Plus,
    G1Minus,
    G2Plus,
    G2Minus,
    SubdivUpper,
    SubdivLower,
    ContractG1,
    ContractG3,
    K4Free,
    TreeT1Plus,
    TreeT1Minus,
    TreeT2Plus,
    TreeT2Minus,
    TreeBlowup,
    ProductStarStar,
    ProductRegularSnake,
    JoinSameDegseq,
    JoinStarComplete,
}

impl FamilyId {
    pub const ALL: [FamilyId; 23] = [
        FamilyId::Path,
        FamilyId::Cycle,
        FamilyId::Complete,
        FamilyId::CompleteBipartite,
        FamilyId::Star,
        FamilyId::G1Plus,
        FamilyId::G1Minus,
        FamilyId::G2Plus,
        FamilyId::G2Minus,
        FamilyId::SubdivUpper,
        FamilyId::SubdivLower,
        FamilyId::ContractG1,
        FamilyId::ContractG3,
        FamilyId::K4Free,
        FamilyId::TreeT1Plus,
        FamilyId::TreeT1Minus,
        FamilyId::TreeT2Plus,
        FamilyId::TreeT2Minus,
        FamilyId::TreeBlowup,
        FamilyId::ProductStarStar,
        FamilyId::ProductRegularSnake,
        FamilyId::JoinSameDegseq,
        FamilyId::JoinStarComplete,
    ];

    pub fn name(self) -> &'static str {
        self.info().name
    }

    pub fn info(self) -> &'static FamilyInfo {
        &CATALOG[self as usize]
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| ConstructionError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub min: u64,
    pub default: u64,
}

const fn param(name: &'static str, min: u64, default: u64) -> ParamSpec {
    ParamSpec { name, min, default }
}

/// Catalog metadata for one family. The first parameter is the one swept
/// by reproduction runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyInfo {
    pub family: FamilyId,
    pub name: &'static str,
    pub params: &'static [ParamSpec],
    /// Theorem the designated operation exercises, and which of its bounds
    /// the family is claimed to attain.
    pub theorem: Option<TheoremId>,
    pub sharp: Option<BoundSide>,
    pub summary: &'static str,
}

impl FamilyInfo {
    pub fn primary_param(&self) -> &'static ParamSpec {
        &self.params[0]
    }
}

use BoundSide::{Lower, Upper};
use TheoremId as T;

const fn entry(
    family: FamilyId,
    name: &'static str,
    params: &'static [ParamSpec],
    theorem: Option<TheoremId>,
    sharp: Option<BoundSide>,
    summary: &'static str,
) -> FamilyInfo {
    FamilyInfo {
        family,
        name,
        params,
        theorem,
        sharp,
        summary,
    }
}

static CATALOG: [FamilyInfo; 23] = [
    entry(FamilyId::Path, "path", &[param("n", 3, 5)], Some(T::Subdivision), Some(Upper),
        "P_n, subdivide v1v2: n-1 -> n"),
    entry(FamilyId::Cycle, "cycle", &[param("n", 3, 6)], Some(T::EdgeDelete), None,
        "C_n, delete v1vn: n -> n-1"),
    entry(FamilyId::Complete, "complete", &[param("n", 2, 4)], Some(T::VertexDeleteGeneral), Some(Upper),
        "K_n, delete a vertex: n -> n-1"),
    entry(FamilyId::CompleteBipartite, "complete_bipartite", &[param("n", 1, 3)], Some(T::VertexAddGeneral), Some(Upper),
        "K_{n,n+1}, add a vertex joined to the larger part: 2 -> 2n+2"),
    entry(FamilyId::Star, "star", &[param("m", 1, 4)], Some(T::VertexDeleteGeneral), Some(Lower),
        "K_{1,m}, delete the center: 2 -> 1"),
    entry(FamilyId::G1Plus, "g1_plus", &[param("k", 3, 4)], Some(T::EdgeAdd), Some(Upper),
        "caterpillar on P_{3k} with z, add e=(v_{k+1},v_{2k+1}): k -> 3k"),
    entry(FamilyId::G1Minus, "g1_minus", &[param("k", 2, 4)], Some(T::EdgeDelete), Some(Upper),
        "P_{3k-1} with leaves at v1,v2 and chord e=(v_{k+1},v_{2k+1}), delete e: k -> 3k-1"),
    entry(FamilyId::G2Plus, "g2_plus", &[param("k", 2, 4)], Some(T::EdgeAdd), Some(Lower),
        "g1_minus without e, add e: 3k-1 -> k"),
    entry(FamilyId::G2Minus, "g2_minus", &[param("k", 3, 4)], Some(T::EdgeDelete), Some(Lower),
        "g1_plus with e, delete e: 3k -> k"),
    entry(FamilyId::SubdivUpper, "subdiv_upper", &[param("n", 3, 6)], Some(T::Subdivision), Some(Upper),
        "P_n, subdivide the middle edge: n-1 -> n"),
    entry(FamilyId::SubdivLower, "subdiv_lower", &[param("n", 4, 8)], Some(T::Subdivision), Some(Lower),
        "P_n with leaves at v2..v_{n-1}, subdivide the middle edge: n-1 -> ceil(n/2)"),
    entry(FamilyId::ContractG1, "contract_g1", &[param("k", 2, 4)], Some(T::ContractionTriangleFree), Some(Upper),
        "P_{2k+1} with leaves at v2..v_{2k} and second leaves at v_k,v_{2k}, contract a leaf edge at v_k: k -> 2k"),
    entry(FamilyId::ContractG3, "contract_g3", &[param("k", 2, 3)], Some(T::ContractionTriangleFree), Some(Lower),
        "P_{3k+3} caterpillar with chord e=(v_{k+1},v_{2k+2}), contract e: 3k+3 -> k+1"),
    entry(FamilyId::K4Free, "k4_free", &[param("k", 2, 2)], None, None,
        "K4-free graph on P_{4k} plus edge uv, contract uv: 4 -> 4k+1"),
    entry(FamilyId::TreeT1Plus, "tree_t1_plus", &[param("k", 2, 4)], Some(T::TreeLeafAdd), Some(Upper),
        "P_{2k+1} with leaves except at v1,v_{k+1},v_{2k+1}, add a leaf at v_{k+1}: k -> 2k"),
    entry(FamilyId::TreeT1Minus, "tree_t1_minus", &[param("k", 2, 4)], Some(T::TreeLeafDelete), Some(Upper),
        "P_{2k+1} with leaves at v_k and v_{2k}, delete the leaf of v_k: k -> 2k"),
    entry(FamilyId::TreeT2Plus, "tree_t2_plus", &[param("k", 2, 3)], Some(T::TreeLeafAdd), Some(Lower),
        "P_{2k+1} with a leaf at v_{2k}, add a leaf at v_k: 2k -> k"),
    entry(FamilyId::TreeT2Minus, "tree_t2_minus", &[param("k", 2, 3)], Some(T::TreeLeafDelete), Some(Lower),
        "P_{2k+1} with leaves at v2..v_{2k}, delete the leaf of v_{k+1}: 2k -> k"),
    entry(FamilyId::TreeBlowup, "tree_blowup", &[param("k", 1, 3)], Some(T::VertexAddGeneral), None,
        "P_{2k+1} with leaves at even v_i, add a vertex joined to every odd v_i: 2 -> 2k+1"),
    entry(FamilyId::ProductStarStar, "product_star_star", &[param("m", 2, 3)], Some(T::CartesianProduct), Some(Lower),
        "K_{1,m} box K_{1,m}: 2, 2 -> 3"),
    entry(FamilyId::ProductRegularSnake, "product_regular_snake", &[param("t", 3, 4), param("s", 3, 3)], Some(T::CartesianProduct), Some(Upper),
        "C_t box P_s: t, s-1 -> t(s-1)"),
    entry(FamilyId::JoinSameDegseq, "join_same_degseq", &[param("n", 3, 4)], Some(T::Join), Some(Upper),
        "P_n + P_n: n-1, n-1 -> 2n"),
    entry(FamilyId::JoinStarComplete, "join_star_complete", &[param("k", 1, 3), param("m", 1, 3)], Some(T::Join), Some(Lower),
        "K_{1,m} + K_k: 2, k -> k+2"),
];

pub fn list_families() -> &'static [FamilyInfo] {
    &CATALOG
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family {family} has no parameter `{param}`")]
    UnknownParam { family: FamilyId, param: String },
    #[error("family {family}: parameter {param}={value} is below its minimum {min}")]
    ParamTooSmall {
        family: FamilyId,
        param: &'static str,
        value: u64,
        min: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionInstance {
    pub family: FamilyId,
    /// Every parameter of the family, defaults filled in.
    pub params: Params,
    pub graph: Graph,
    /// The operation (and its target) the family is built around.
    pub operation: Operation,
    pub claimed_mp_before: usize,
    pub claimed_mp_after: usize,
    /// mp of the partner graph, for two-graph operations.
    pub claimed_mp_partner: Option<usize>,
}

/// Incremental graph builder with 1-based spine helpers.
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            n: 0,
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// Adds a path on `len` vertices; `spine[i]` is `v_i` (index 0 unused).
    fn spine(&mut self, len: usize) -> Vec<usize> {
        let mut spine = vec![usize::MAX];
        for i in 0..len {
            let v = self.vertex();
            if i > 0 {
                self.edges.push((v - 1, v));
            }
            spine.push(v);
        }
        spine
    }

    fn leaf(&mut self, at: usize) -> usize {
        let v = self.vertex();
        self.edges.push((at, v));
        v
    }

    fn edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    fn build(&self) -> Graph {
        Graph::from_edge_list(self.n, &self.edges).expect("constructions produce simple graphs")
    }
}

fn edge(a: usize, b: usize) -> Edge {
    Edge::new(a, b).expect("constructions never target loops")
}

fn ceil_half(x: usize) -> usize {
    x.div_ceil(2)
}

/// G1+: P_{3k}, leaves at v2..v_{3k-2} except v_{k+1} and v_{2k+1}, and
/// v_{3k-1} joined to an auxiliary z carrying two leaves. Returns the
/// graph and e = (v_{k+1}, v_{2k+1}).
fn g1_plus(k: usize) -> (Graph, Edge) {
    let mut b = Builder::new();
    let v = b.spine(3 * k);
    for i in 2..=3 * k - 2 {
        if i != k + 1 && i != 2 * k + 1 {
            b.leaf(v[i]);
        }
    }
    let z = b.vertex();
    b.edge(v[3 * k - 1], z);
    b.leaf(z);
    b.leaf(z);
    (b.build(), edge(v[k + 1], v[2 * k + 1]))
}

/// G1-: P_{3k-1}, three leaves at v1, one leaf at v2, chord
/// e = (v_{k+1}, v_{2k+1}). Returns the graph without e, and e.
fn g1_minus_without_chord(k: usize) -> (Graph, Edge) {
    let mut b = Builder::new();
    let v = b.spine(3 * k - 1);
    for _ in 0..3 {
        b.leaf(v[1]);
    }
    b.leaf(v[2]);
    (b.build(), edge(v[k + 1], v[2 * k + 1]))
}

fn with_edge(g: &Graph, e: Edge) -> Graph {
    crate::ops::add_edge(g, e.u(), e.v()).expect("chord is absent before it is added")
}

fn caterpillar(spine_len: usize, leaf_at: impl Fn(usize) -> bool) -> (Builder, Vec<usize>) {
    let mut b = Builder::new();
    let v = b.spine(spine_len);
    for i in 1..=spine_len {
        if leaf_at(i) {
            b.leaf(v[i]);
        }
    }
    (b, v)
}

fn resolve(family: FamilyId, given: &Params) -> Result<Params, ConstructionError> {
    let info = family.info();
    for name in given.keys() {
        if !info.params.iter().any(|p| p.name == name) {
            return Err(ConstructionError::UnknownParam {
                family,
                param: name.clone(),
            });
        }
    }
    let mut out = Params::new();
    for p in info.params {
        let value = given.get(p.name).copied().unwrap_or(p.default);
        if value < p.min {
            return Err(ConstructionError::ParamTooSmall {
                family,
                param: p.name,
                value,
                min: p.min,
            });
        }
        out.insert(p.name.to_string(), value);
    }
    Ok(out)
}

/// Builds one family member. Missing parameters take their defaults.
pub fn generate(family: FamilyId, params: &Params) -> Result<ConstructionInstance, ConstructionError> {
    let params = resolve(family, params)?;
    let get = |name: &str| params[name] as usize;
    let id = VertexId;

    let (graph, operation, before, after, partner) = match family {
        FamilyId::Path => {
            let n = get("n");
            (named::path(n), Operation::Subdivide(edge(0, 1)), n - 1, n, None)
        }
        FamilyId::Cycle => {
            let n = get("n");
            (named::cycle(n), Operation::DeleteEdge(edge(0, n - 1)), n, n - 1, None)
        }
        FamilyId::Complete => {
            let n = get("n");
            (named::complete(n), Operation::DeleteVertex(id(n - 1)), n, n - 1, None)
        }
        FamilyId::CompleteBipartite => {
            let n = get("n");
            let larger = (n..2 * n + 1).map(id).collect();
            (
                named::complete_bipartite(n, n + 1),
                Operation::AddVertex(larger),
                2,
                2 * n + 2,
                None,
            )
        }
        FamilyId::Star => (named::star(get("m")), Operation::DeleteVertex(id(0)), 2, 1, None),
        FamilyId::G1Plus => {
            let k = get("k");
            let (g, e) = g1_plus(k);
            (g, Operation::AddEdge(e), k, 3 * k, None)
        }
        FamilyId::G1Minus => {
            let k = get("k");
            let (g, e) = g1_minus_without_chord(k);
            (with_edge(&g, e), Operation::DeleteEdge(e), k, 3 * k - 1, None)
        }
        FamilyId::G2Plus => {
            let k = get("k");
            let (g, e) = g1_minus_without_chord(k);
            (g, Operation::AddEdge(e), 3 * k - 1, k, None)
        }
        FamilyId::G2Minus => {
            let k = get("k");
            let (g, e) = g1_plus(k);
            (with_edge(&g, e), Operation::DeleteEdge(e), 3 * k, k, None)
        }
        FamilyId::SubdivUpper => {
            let n = get("n");
            let c = ceil_half(n);
            (named::path(n), Operation::Subdivide(edge(c - 1, c)), n - 1, n, None)
        }
        FamilyId::SubdivLower => {
            let n = get("n");
            let (b, v) = caterpillar(n, |i| (2..n).contains(&i));
            let c = ceil_half(n);
            (
                b.build(),
                Operation::Subdivide(edge(v[c], v[c + 1])),
                n - 1,
                ceil_half(n),
                None,
            )
        }
        FamilyId::ContractG1 => {
            let k = get("k");
            let mut b = Builder::new();
            let v = b.spine(2 * k + 1);
            let mut first_leaf_of_vk = 0;
            for i in 2..=2 * k {
                let l = b.leaf(v[i]);
                if i == k {
                    first_leaf_of_vk = l;
                }
            }
            b.leaf(v[k]);
            b.leaf(v[2 * k]);
            (
                b.build(),
                Operation::Contract(edge(v[k], first_leaf_of_vk)),
                k,
                2 * k,
                None,
            )
        }
        FamilyId::ContractG3 => {
            let k = get("k");
            let len = 3 * k + 3;
            let mut b = Builder::new();
            let v = b.spine(len);
            let mut special = Vec::new();
            for i in 2..=len - 1 {
                if i != k + 1 && i != 2 * k + 2 {
                    let l = b.leaf(v[i]);
                    if i == k + 2 || i == 2 * k + 1 {
                        special.push(l);
                    }
                }
            }
            for _ in 0..3 {
                b.leaf(v[len]);
            }
            for &l in &special {
                for _ in 0..3 {
                    b.leaf(l);
                }
            }
            let e = edge(v[k + 1], v[2 * k + 2]);
            b.edge(e.u().0, e.v().0);
            (b.build(), Operation::Contract(e), 3 * k + 3, k + 1, None)
        }
        FamilyId::K4Free => {
            let k = get("k");
            let mut b = Builder::new();
            let p = b.spine(4 * k);
            let u = b.vertex();
            let w = b.vertex();
            b.edge(u, w);
            for i in 1..=2 * k {
                b.edge(p[2 * i], u);
                b.edge(p[2 * i], w);
            }
            for i in 1..=k {
                b.edge(p[2 * i - 1], u);
            }
            for i in k + 1..=2 * k {
                b.edge(p[2 * i - 1], w);
            }
            b.edge(p[1], p[4 * k]);
            (b.build(), Operation::Contract(edge(u, w)), 4, 4 * k + 1, None)
        }
        FamilyId::TreeT1Plus => {
            let k = get("k");
            let (b, v) = caterpillar(2 * k + 1, |i| i != 1 && i != k + 1 && i != 2 * k + 1);
            (b.build(), Operation::AddVertex(vec![id(v[k + 1])]), k, 2 * k, None)
        }
        FamilyId::TreeT1Minus => {
            let k = get("k");
            let mut b = Builder::new();
            let v = b.spine(2 * k + 1);
            let leaf = b.leaf(v[k]);
            b.leaf(v[2 * k]);
            (b.build(), Operation::DeleteVertex(id(leaf)), k, 2 * k, None)
        }
        FamilyId::TreeT2Plus => {
            let k = get("k");
            let (b, v) = caterpillar(2 * k + 1, |i| i == 2 * k);
            (b.build(), Operation::AddVertex(vec![id(v[k])]), 2 * k, k, None)
        }
        FamilyId::TreeT2Minus => {
            let k = get("k");
            let (b, _) = caterpillar(2 * k + 1, |i| i != 1 && i != 2 * k + 1);
            // Leaves follow the spine in order: v_i's leaf is spine_len + i - 2.
            let leaf = (2 * k + 1) + (k + 1) - 2;
            (b.build(), Operation::DeleteVertex(id(leaf)), 2 * k, k, None)
        }
        FamilyId::TreeBlowup => {
            let k = get("k");
            let (b, v) = caterpillar(2 * k + 1, |i| i % 2 == 0);
            let odd = (0..=k).map(|i| id(v[2 * i + 1])).collect();
            (b.build(), Operation::AddVertex(odd), 2, 2 * k + 1, None)
        }
        FamilyId::ProductStarStar => {
            let m = get("m");
            let s = named::star(m);
            (s.clone(), Operation::CartesianProduct(s), 2, 3, Some(2))
        }
        FamilyId::ProductRegularSnake => {
            let (t, s) = (get("t"), get("s"));
            (
                named::cycle(t),
                Operation::CartesianProduct(named::path(s)),
                t,
                t * (s - 1),
                Some(s - 1),
            )
        }
        FamilyId::JoinSameDegseq => {
            let n = get("n");
            (named::path(n), Operation::Join(named::path(n)), n - 1, 2 * n, Some(n - 1))
        }
        FamilyId::JoinStarComplete => {
            let (k, m) = (get("k"), get("m"));
            (named::star(m), Operation::Join(named::complete(k)), 2, k + 2, Some(k))
        }
    };

    Ok(ConstructionInstance {
        family,
        params,
        graph,
        operation,
        claimed_mp_before: before,
        claimed_mp_after: after,
        claimed_mp_partner: partner,
    })
}

/// Shorthand for a single-parameter family member.
pub fn generate_with(family: FamilyId, name: &str, value: u64) -> Result<ConstructionInstance, ConstructionError> {
    generate(family, &Params::from([(name.to_string(), value)]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_complete_and_ordered() {
        assert_eq!(list_families().len(), 23);
        for (i, info) in list_families().iter().enumerate() {
            assert_eq!(info.family as usize, i);
            assert_eq!(info.family, FamilyId::ALL[i]);
            assert_eq!(info.name.parse::<FamilyId>(), Ok(info.family));
        }
        assert_eq!(
            "nope".parse::<FamilyId>(),
            Err(ConstructionError::UnknownFamily("nope".into()))
        );
        let g1 = FamilyId::G1Plus.info();
        assert_eq!((g1.theorem, g1.sharp), (Some(TheoremId::EdgeAdd), Some(BoundSide::Upper)));
        assert!(FamilyId::K4Free.info().summary.contains("K4-free"));
    }

    #[test]
    fn params_are_validated() {
        assert!(matches!(
            generate_with(FamilyId::G1Plus, "k", 1),
            Err(ConstructionError::ParamTooSmall { min: 3, .. })
        ));
        assert!(matches!(
            generate_with(FamilyId::G1Plus, "n", 4),
            Err(ConstructionError::UnknownParam { .. })
        ));
        let inst = generate(FamilyId::JoinStarComplete, &Params::new()).unwrap();
        assert_eq!(inst.params, Params::from([("k".into(), 3), ("m".into(), 3)]));
    }

    #[test]
    fn structural_examples() {
        let g1 = generate_with(FamilyId::G1Plus, "k", 4).unwrap();
        assert_eq!(g1.graph.n(), 22);
        assert_eq!((g1.claimed_mp_before, g1.claimed_mp_after), (4, 12));
        assert_eq!(g1.operation, Operation::AddEdge(edge(4, 8)));

        let g3 = generate_with(FamilyId::ContractG3, "k", 3).unwrap();
        assert_eq!((g3.claimed_mp_before, g3.claimed_mp_after), (12, 4));
        let len = 12;
        let spine_degrees: Vec<_> = (0..len).map(|i| g3.graph.neighbors(i).len()).collect();
        let mut expected = vec![1];
        expected.extend(std::iter::repeat_n(3, len - 2));
        expected.push(4);
        assert_eq!(spine_degrees, expected);
        assert!(g3.graph.is_triangle_free());

        let k4 = generate_with(FamilyId::K4Free, "k", 2).unwrap();
        assert_eq!(k4.graph.n(), 10);
        assert_eq!((k4.claimed_mp_before, k4.claimed_mp_after), (4, 9));

        let t2 = generate_with(FamilyId::TreeT2Plus, "k", 3).unwrap();
        assert_eq!((t2.claimed_mp_before, t2.claimed_mp_after), (6, 3));
    }

    #[test]
    fn every_family_builds_at_its_minimum() {
        for info in list_families() {
            let p = info.primary_param();
            let inst = generate_with(info.family, p.name, p.min).unwrap();
            let applied = inst.operation.apply(&inst.graph).unwrap();
            assert_eq!(applied.after.n(), applied.expected_vertex_count(), "{}", info.name);
        }
    }

    #[test]
    fn tree_families_are_trees() {
        for f in [
            FamilyId::TreeT1Plus,
            FamilyId::TreeT1Minus,
            FamilyId::TreeT2Plus,
            FamilyId::TreeT2Minus,
            FamilyId::TreeBlowup,
        ] {
            for k in 2..9 {
                let inst = generate_with(f, "k", k).unwrap();
                assert!(inst.graph.is_tree(), "{f} k={k}");
                if f != FamilyId::TreeBlowup {
                    assert!(inst.operation.apply(&inst.graph).unwrap().after.is_tree());
                }
            }
        }
    }

    #[test]
    fn t2_minus_deletes_the_leaf_of_the_middle_vertex() {
        let inst = generate_with(FamilyId::TreeT2Minus, "k", 3).unwrap();
        let Operation::DeleteVertex(leaf) = inst.operation else {
            panic!("expected a vertex deletion");
        };
        assert_eq!(inst.graph.neighbors(leaf.0), &[3]);
    }
}

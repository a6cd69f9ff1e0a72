//! Degree-monotone paths: exact solver, graph operations, extremal
//! constructions and bound verification.

pub mod bounds;
pub mod campaign;
pub mod cli;
pub mod constructions;
pub mod format;
pub mod graph;
pub mod ops;
pub mod oracle;
pub mod solver;

pub use bounds::{check_bound, BoundCheckRecord, BoundSide, Rational, TheoremId, TheoremSpec};
pub use campaign::{run_campaign, CampaignConfig, CampaignReport, RandomModel, TargetPolicy};
pub use constructions::{generate, ConstructionInstance, FamilyId, Params};
pub use graph::{Edge, Graph, GraphError, VertexId};
pub use ops::{IdMap, Operation, OperationKind};
pub use oracle::mp_oracle;
pub use solver::{mp, mp_exact, MonotonePath, MpResult, SearchLimits};

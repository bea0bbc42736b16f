//! Exact domination-type graph parameters on small graphs.
//!
//! Graphs have at most 64 vertices and vertex subsets are single `u64`
//! masks ([`VertexSet`]). Every parameter is computed by exhaustive subset
//! enumeration with a witness set, and the [`harness`] sweeps enumerated
//! graph classes checking known bounds and characterizations.

pub mod claim;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod io;
pub mod solvers;
pub mod structure;
pub mod vertex_set;

pub use claim::Claim;
pub use enumerate::{
    enumerate_connected_graphs, enumerate_trees, make_named, random_connected_graph,
    EnumerationCursor, Universe,
};
pub use error::{Error, Result};
pub use graph::{Graph, InducedSubgraph};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use harness::{
    check_theorem, hunt, run_sweep, Check, HuntOutcome, Outcome, SweepConfig, SweepReport,
    SweepUniverse, TheoremId, TheoremVerdict,
};
pub use solvers::{compute_report, max_over, min_over, Extremum, Param, ParameterReport, SetFamily};
pub use structure::{
    all_leaf_or_support, build_spanning_tree_preserving, caterpillar_code, classify_tree_gamma,
    find_spanning_caterpillar_same_diameter, has_dominating_vertex, CaterpillarCode,
    SpanningTreeCertificate, TreeGammaClass,
};
pub use vertex_set::VertexSet;

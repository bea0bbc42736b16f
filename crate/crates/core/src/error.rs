use thiserror::Error;

use crate::graph6::Graph6Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order {0} outside supported range 1..=64")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("induced subgraph requested for the empty vertex set")]
    EmptyVertexSet,
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("line {line}: {source}")]
    Graph6Line { line: usize, source: Graph6Error },
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not connected")]
    Disconnected,
    #[error("operation needs at least {min} vertices, graph has {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("{set} is not a total dominating set")]
    NotTotalDominating { set: crate::VertexSet },
    #[error("{set} is not an isolate set")]
    NotIsolateSet { set: crate::VertexSet },
    #[error("{what}: n = {n} outside supported range {min}..={max}")]
    UnsupportedOrder { what: &'static str, n: usize, min: usize, max: usize },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}` needs k >= {min}, got {k}")]
    FamilyTooSmall { family: &'static str, k: usize, min: usize },
    #[error("edge probability {0} not in the open interval (0, 1)")]
    InvalidProbability(f64),
    #[error("no connected sample after {attempts} attempts")]
    RejectionBudgetExceeded { attempts: usize },
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("cannot parse claim: {0}")]
    ClaimParse(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

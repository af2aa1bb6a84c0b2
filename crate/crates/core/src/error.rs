use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parallel edge ({0}, {1})")]
    ParallelEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex id out of range: {id} (n = {n})")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("no cubic graph exists on {0} vertices")]
    NoCubicGraph(usize),
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid path length k = {k} (graph has {n} vertices)")]
    InvalidLength { k: usize, n: usize },
    #[error("no path of requested length {k} from vertex {from}")]
    NoSuchPath { from: usize, k: usize },
    #[error("maximum degree exceeds 3 (found {0})")]
    DegreeTooLarge(usize),
    #[error("graph is not cubic")]
    NotCubic,
    #[error("no Hamilton cycle")]
    NoHamiltonCycle,
    #[error("missing weight for edge ({0}, {1})")]
    MissingWeight(usize, usize),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("instance too large for oracle ({0} paths)")]
    OracleTooLarge(String),
    #[error("count budget of {0} search nodes exceeded")]
    BudgetExceeded(u64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
}

use thiserror::Error;

/// Everything that can go wrong while building graphs, parsing them, or
/// running the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graph has {n} vertices, limit is {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertices must be distinct, got {0} twice")]
    SameVertex(usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("k = {k} outside the supported range {min}..={max}")]
    KOutOfRange { k: usize, min: usize, max: usize },
    #[error("m = {0} is too small, need m >= 2")]
    MTooSmall(usize),
    #[error("n = {n} outside the supported range 1..={max}")]
    NTooLarge { n: usize, max: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6 byte {pos}: {msg}")]
    Graph6 { pos: usize, msg: String },
    #[error("distinction table would need {bytes} bytes")]
    SearchTooLarge { bytes: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

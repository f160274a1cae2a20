use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {order} exceeds capacity {max}")]
    Capacity { order: usize, max: usize },
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set is not a subset of the vertex set of a graph of order {order}")]
    NotSubset { order: usize },
    #[error("graph is disconnected: some distances are infinite")]
    Disconnected,
    #[error("invalid extremal parameters n={n}, k={k}, s={s}: {reason}")]
    ExtremalParams {
        n: usize,
        k: usize,
        s: usize,
        reason: &'static str,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {offset}: character {byte:#04x} outside the printable graph6 range 63..=126")]
    BadCharacter { offset: usize, byte: u8 },
    #[error("byte {offset}: unsupported size prefix (only single-byte sizes n <= 62)")]
    BadLength { offset: usize },
    #[error("byte {offset}: expected {expected} bytes in total, found {found}")]
    WrongLength {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: nonzero padding bits")]
    TrailingBits { offset: usize },
    #[error("order {0} cannot be encoded with a single-byte graph6 size prefix")]
    UnsupportedSize(usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("expected a {expected}x{expected} matrix, found order {found}")]
    WrongOrder { expected: usize, found: usize },
    #[error("invalid partition: {0}")]
    Partition(&'static str),
    #[error("parameters outside the validity region of {family}: {reason}")]
    Domain {
        family: &'static str,
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("edge ({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("edges share vertex {0}")]
    NotAMatching(usize),
    #[error("search space of {0} candidates exceeds the enumeration cap")]
    SearchTooLarge(u128),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HarnessError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error("parameters outside the hypothesis region: {0}")]
    OutsideRegion(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
}

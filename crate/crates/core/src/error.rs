use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("cycle needs n >= 3, got {0}")]
    CycleTooSmall(usize),
    #[error("m = {m} exceeds n(n-1)/2 = {max} for n = {n}")]
    TooManyEdges { n: usize, m: usize, max: usize },
    #[error("exhaustive cap: n = {n} exceeds the limit of {cap} vertices")]
    ExhaustiveCap { n: usize, cap: usize },
    #[error("enumeration index {index} out of range for n = {n}")]
    IndexOutOfRange { n: usize, index: u64 },
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
}

/// graph6 decode failure; `offset` is the byte position in the input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 byte {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6ErrorKind {
    #[error("empty input")]
    Empty,
    #[error("character {0:#04x} outside the printable range 63..=126")]
    BadChar(u8),
    #[error("vertex counts above 62 are not supported")]
    Unsupported,
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("payload truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("unexpected trailing data")]
    Trailing,
    #[error("nonzero padding bits")]
    Padding,
}

/// Edge-list decode failure, with a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct EdgeListError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal mass {residual:e})")]
    NotConverged { sweeps: usize, residual: f64 },
    #[error("k = {k} outside 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("matrix is not square: {len} entries for order {order}")]
    Shape { order: usize, len: usize },
    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("bound needs n >= 2, got n = {0}")]
    TooFewVertices(usize),
    #[error("k = {k} outside 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("t = {0} outside [0, 1]")]
    TOutOfRange(f64),
    #[error("Zhou's bound needs 1 <= k <= n-2 (k = {k}, n = {n})")]
    ZhouInapplicable { k: usize, n: usize },
    #[error("m = {m} exceeds n(n-1)/2 for n = {n}")]
    TooManyEdges { n: usize, m: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    /// A proved k-interval produced a failing conjecture check.
    #[error("interval cross-check failed; diagnostic dump:\n{dump}")]
    IntervalViolation { dump: String },
}

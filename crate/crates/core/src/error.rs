use thiserror::Error;

/// Errors produced by graph builders and bounded algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph on {n} vertices exceeds the size bound {limit} for this operation")]
    SizeBound { n: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not congruent to 1 mod 4")]
    BadResidue(u64),
    #[error("unsupported field: {0} is a proper prime power; only prime orders are supported")]
    UnsupportedField(u64),
    #[error("expected {expected} blocks, got {got}")]
    BlockCountMismatch { expected: usize, got: usize },
    #[error("iteration bound {0} exhausted before the orbit repeated")]
    OrbitBoundExhausted(usize),
    #[error("search budget exceeded ({0} steps)")]
    BudgetExceeded(u64),
}

pub type Result<T> = std::result::Result<T, Error>;

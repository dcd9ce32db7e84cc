use thiserror::Error;

/// Errors raised by the descent algebra library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("rank {rank} exceeds the supported cap of {cap}")]
    RankCap { rank: usize, cap: usize },

    #[error("rank must be at least 1")]
    RankZero,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid root e_{i} - e_{j} at rank {rank}")]
    InvalidRoot { i: usize, j: usize, rank: usize },

    #[error("invalid subset of simple roots: {0}")]
    InvalidSubset(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{inner} is not contained in {outer}")]
    NotSubset { inner: String, outer: String },

    #[error("context mismatch: expected {expected}, found {found}")]
    ContextMismatch { expected: String, found: String },

    #[error("coefficient overflow")]
    Overflow,

    #[error("decomposition failure: {0}")]
    DecompositionFailure(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

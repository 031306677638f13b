use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown root system type `{0}`")]
    UnknownType(String),

    #[error("rank {rank} is not admissible for type {letter}")]
    InvalidRank { letter: char, rank: usize },

    #[error("invalid subset `{literal}`: {reason}")]
    InvalidSubset { literal: String, reason: String },

    #[error("subset {0} is empty or not connected in the Dynkin diagram")]
    NotConnected(String),

    #[error("{0:?} is not a root")]
    NotARoot(Vec<i32>),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("coefficient at position {0} is zero")]
    ZeroCoefficient(usize),

    #[error("index {index} is outside 0..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("trials must be at least 1")]
    NoTrials,

    #[error("root system {0} is not of type A")]
    NotTypeA(String),

    #[error("invalid composition pair: {0}")]
    InvalidComposition(String),

    /// A self-check failed. Always an implementation bug, never bad input.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("polynomial division is not exact")]
    NotDivisible,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("negative power evaluated at zero")]
    ZeroSubstitution,

    #[error("weight {0:?} is not dominant")]
    NonDominant(Vec<i32>),

    #[error("rank {rank} exceeds the supported maximum {max}")]
    RankTooLarge { rank: usize, max: usize },

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("simple reflection index {index} out of range for rank {rank}")]
    ReflectionIndex { index: usize, rank: usize },

    #[error("invalid flag: {0}")]
    InvalidFlag(String),

    #[error("invalid system: {0}")]
    InvalidSpec(String),

    #[error("occupancy {occupancy} exceeds rank {rank}")]
    OccupancyExceeded { occupancy: u32, rank: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

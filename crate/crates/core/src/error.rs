use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: &'static str, right: &'static str },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a genuine character: multiplicity of {partition} is {value}")]
    NotACharacter { partition: Partition, value: String },

    #[error("matrix is not functional: row {row} has {ones} nonzero entries")]
    NonFunctionalMatrix { row: usize, ones: usize },

    #[error("matrix entry ({row},{col}) is {value}, expected 0 or 1")]
    NonBinaryMatrix { row: usize, col: usize, value: i64 },

    #[error("partial transformation is not nilpotent")]
    NotNilpotent,

    #[error("invalid forest: {0}")]
    InvalidForest(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("size {n} exceeds the brute-force cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("n = {0} is outside the closed-form range (n >= 2)")]
    OutsideTheoremRange(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("verification failed for n = {n}, {space}: {detail}")]
    Mismatch { n: usize, space: String, detail: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

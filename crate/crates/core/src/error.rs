use thiserror::Error;

use crate::sequences::ValidationReport;

/// Errors produced by the class computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vanishing pair: {0}")]
    InvalidPair(ValidationReport),

    #[error("gap condition fails at index {index}: neither consecutive gap equals 1")]
    GapCondition { index: usize },

    #[error("invalid triple: {0}")]
    InvalidTriple(String),

    #[error("invalid strict partition: {0}")]
    InvalidPartition(String),

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("out of bounds: {0}")]
    Bounds(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("resource guard: {what} = {value} exceeds limit {limit}")]
    Resource {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("no signed permutation in W_{n}^+ satisfies the rank conditions")]
    NoSolution { n: usize },

    #[error(
        "the satisfying set has no unique Bruhat minimum ({candidates} minimal-length candidates)"
    )]
    NonUniqueMinimum { candidates: usize },

    #[error("minimal element has length {found}, expected {expected}")]
    LengthMismatch { expected: u64, found: u64 },

    #[error("matrix is not skew-symmetric at ({row}, {col})")]
    NotSkewSymmetric { row: usize, col: usize },

    #[error("matrix must be square of even size, got {rows}x{cols}")]
    OddSize { rows: usize, cols: usize },

    #[error("entry index ({i}, {j}) invalid for a partition of length {len}")]
    Index { i: usize, j: usize, len: usize },

    #[error("augmented entries require an odd number of parts, got {len}")]
    Parity { len: usize },

    #[error("genus {g} too small: g-1 < |lambda| = {weight}")]
    Truncation { g: u32, weight: u32 },

    #[error("degree needs g-1 = |lambda|; got g = {g}, |lambda| = {weight}")]
    Dimension { g: u32, weight: u32 },

    #[error("expected an integer, got {0}")]
    Integrality(String),
}

impl Error {
    /// Stable machine-readable code used in CLI error payloads.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidPair(_) => "invalid_pair",
            Error::GapCondition { .. } => "gap_condition",
            Error::InvalidTriple(_) => "invalid_triple",
            Error::InvalidPartition(_) => "invalid_partition",
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::Bounds(_) => "bounds",
            Error::SizeMismatch { .. } => "size_mismatch",
            Error::Resource { .. } => "resource",
            Error::NoSolution { .. } => "no_solution",
            Error::NonUniqueMinimum { .. } => "non_unique_minimum",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::NotSkewSymmetric { .. } => "not_skew_symmetric",
            Error::OddSize { .. } => "odd_size",
            Error::Index { .. } => "index",
            Error::Parity { .. } => "parity",
            Error::Truncation { .. } => "truncation",
            Error::Dimension { .. } => "dimension",
            Error::Integrality(_) => "integrality",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the matrix, recursion, bound and oracle routines.
///
/// Row and column indices are 0-based.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,
    #[error("expected {expected} entries for a square matrix, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },
    #[error("row index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("diagonal entry of row {row} is zero")]
    ZeroDiagonal { row: usize },
    #[error("matrix is not strictly diagonally dominant (row {row} fails)")]
    NotSdd { row: usize },
    #[error("matrix is not a Nekrasov matrix (row {row} fails |a_ii| > h_i)")]
    NotNekrasov { row: usize },
    #[error("mu = {mu} must exceed r_1/|a_11| = {threshold}")]
    MuOutOfRange { mu: f64, threshold: f64 },
    #[error("operation requires n >= 2, got n = {n}")]
    DimensionTooSmall { n: usize },
    #[error("invalid mu grid: {0}")]
    InvalidGrid(&'static str),
    #[error("no grid point lies above the threshold {threshold}")]
    EmptyGrid { threshold: f64 },
    #[error("invalid generator config: {0}")]
    InvalidConfig(&'static str),
    #[error("matrix is singular: pivot column {column} is zero")]
    Singular { column: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

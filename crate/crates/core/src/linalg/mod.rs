//! Exact linear algebra over `Z` and over the Laurent ring.

mod int_matrix;
mod poly_matrix;
mod rational;

pub use int_matrix::{IntMatrix, IntSolution, SmithForm};
pub use poly_matrix::{PolyMatrix, COFACTOR_LIMIT};
pub use rational::solve_rational;

use thiserror::Error;

use crate::laurent::LaurentError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left:?} against {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("rows have different lengths")]
    Ragged,
    #[error("fraction-free step produced an inexact division")]
    InexactDivision,
    #[error(transparent)]
    Parse(#[from] LaurentError),
}

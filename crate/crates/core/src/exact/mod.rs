//! Exact rational scalars, dense matrices and the elimination kernels built
//! on them. Nothing here ever touches floating point.

mod echelon;
mod matrix;
mod scalar;

pub use echelon::RowEchelon;
pub use matrix::ExactMatrix;
pub use scalar::{lcm_of_denominators, ExactScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

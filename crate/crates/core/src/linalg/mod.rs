//! Exact linear algebra over any [`Field`](crate::field::Field).

pub mod echelon;
pub mod matrix;
pub mod rref;
pub mod sparse;
pub mod subspace;

pub use echelon::{solve_affine, EchelonBuilder};
pub use matrix::{Matrix, Rref};
pub use sparse::{Accumulator, SparseVec};
pub use subspace::{LinearQuotient, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not contained in the ambient space")]
    NotContained,
}

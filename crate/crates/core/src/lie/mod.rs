//! Lie algebras and modules from structure constants.

mod algebra;
pub mod catalog;
pub mod json;
mod module;
mod quotient;

pub use algebra::LieAlgebra;
pub use module::LModule;
pub use quotient::{quotient_algebra, quotient_module, AlgebraQuotient, ModuleQuotient};

use crate::field::{FieldTag, ScalarError};
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("brackets must be listed with i < j, got ({i}, {j})")]
    BadPair { i: usize, j: usize },
    #[error("entry ({i}, {j}) listed twice")]
    DuplicateBracket { i: usize, j: usize },
    #[error("not an ideal: [{x}, {y}] leaves the subspace")]
    NotAnIdeal { x: String, y: String },
    #[error("not a submodule: {x} · {v} leaves the subspace")]
    NotASubmodule { x: String, v: String },
    #[error("not a subalgebra: bracket of basis elements {a}, {b} leaves the subspace")]
    NotASubalgebra { a: usize, b: usize },
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldTag, found: FieldTag },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

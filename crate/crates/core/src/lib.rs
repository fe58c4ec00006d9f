//! Centroids, biderivations and commuting maps of Lie algebras given by
//! structure constants, over exact rationals or small prime fields.

pub mod field;
pub mod linalg;

pub use field::{Field, FieldTag, Fp, Rational, ScalarError};

pub type Q = Rational;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub mod lie;
pub mod maps;
pub mod free_lie;
pub mod towers;
pub mod graded_window;
pub mod oracle;
pub mod reproduce;

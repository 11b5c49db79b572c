//! Exact fields and sparse linear algebra.

pub mod echelon;
pub mod field;
pub mod graded;
pub mod homology;
pub mod matrix;
pub mod vector;

pub use echelon::{Echelon, Solver};
pub use field::{Field, FieldSpec, Scalar};
pub use graded::{shift, GradedVectorSpace};
pub use homology::{homology, homology_dims, Homology};
pub use matrix::{intertwiners, rank, SparseMatrix};
pub use vector::{Accumulator, SparseVec};

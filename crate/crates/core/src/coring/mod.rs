//! Corings over a base algebra, bialgebras and Hopf algebras over a field,
//! with exact axiom checkers; exterior bialgebras, Galois corings and tensor
//! corings.

#[allow(clippy::module_inception)]
pub mod coring;
pub mod bialgebra;
pub mod exterior;
pub mod galois;
pub mod report;
pub mod tensor;

pub use bialgebra::{Bialgebra, Convention, Truncation};
pub use coring::{BasisElement, Coring};
pub use exterior::{exterior_bialgebra, DegreeMode};
pub use galois::{coring_tensor, galois_coring, GaloisExtension};
pub use report::{AxiomCheck, AxiomResult, Report, Status};
pub use tensor::{Bimodule, RelTensor};

//! Bar constructions and Tor.

pub mod antipode;
pub mod complex;
pub mod resolution;
pub mod tor;

pub use antipode::{antipode, antipode_by_solve};
pub use resolution::{tor_dims_via_resolution, tor_dims_via_resolution_bounded};
pub use complex::{bar_complex, shuffles, BarComplex};
pub use tor::{default_internal_bound, tor_bialgebra, tor_bialgebra_bounded, TorHopf};

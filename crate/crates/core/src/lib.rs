//! Exact computation of graded Tor Hopf algebras, corings extracted from
//! comonads, shifted-subgroup corings of elementary abelian groups, Galois
//! corings and their comodules, together with checkers for every structural
//! axiom involved.

pub mod algebra;
pub mod bar;
pub mod cli;
pub mod comodule;
pub mod coring;
pub mod error;
pub mod io;
pub mod linalg;
pub mod stable;
pub mod watts;

pub use error::{Error, Result};

//! Graded algebras from presentations: monomial quotients of polynomial
//! rings, exterior algebras, elementary abelian group algebras with their
//! Hopf structure, and quiver algebras with relations.

pub mod graded;
pub mod group;
pub mod presentation;
pub mod quiver;

pub use graded::{AlgebraDefect, AlgebraMap, GradedAlgebra};
pub use group::{elementary_abelian_algebra, elementary_abelian_hopf, GroupHopf};
pub use presentation::{
    exterior_algebra, parse_element, parse_presentation, realize, AlgebraPresentation, MonomialPresentation,
};
pub use quiver::{QuiverJson, QuiverPresentation};

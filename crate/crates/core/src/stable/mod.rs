//! Modules over `k[t]/(t^p)` up to projectives, restriction and coinduction
//! along cyclic shifted subgroups of an elementary abelian `p`-group, the
//! preprojective algebra as a stable endomorphism algebra, and the corings
//! extracted from the resulting comonads.

pub mod comonad;
pub mod coring;
pub mod endo;
pub mod hom;
pub mod module;
pub mod point;

pub use comonad::{check_comonad, check_comonad_maps, comonad_maps, ComonadMaps};
pub use coring::{certify_exterior, comonad_object_blocks, shifted_subgroup_coring, StableCoring};
pub use endo::{stable_endomorphism_algebra, StableEndo};
pub use hom::{cover_generators, stable_hom, StableHom};
pub use module::{random_stable_module, StableModule, StableModuleJson};
pub use point::{random_ke_module, KeModule, ShiftedPoint};

//! Corings extracted from comonads given as composites of base change and
//! restriction, with battery checks of the identification `T ≅ − ⊗_S C`.

pub mod checks;
pub mod extract;
pub mod module;
pub mod spec;

pub use checks::{determination_at_regular, grading_shift_check, Codomain, Transformation};
pub use extract::{action_map, extract_coring, tensor_with, verify_watts, ExtractedCoring};
pub use module::{battery, random_module, RightModule};
pub use spec::{parse_ring, ChainMap, ComonadSpec, ComonadSpecJson, Evaluated, MapJson};

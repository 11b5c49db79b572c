//! Comodules over corings and bialgebras, the duality with modules over the
//! dual algebra, and Galois descent.

pub mod comodule;
pub mod descent;
pub mod phi;
pub mod random;

pub use comodule::{comodule_tensor, same_coring, Comodule};
pub use descent::{descend_comodule, induce_comodule};
pub use phi::{phi_dualize, phi_inverse, DualModule};
pub use random::random_comodule;

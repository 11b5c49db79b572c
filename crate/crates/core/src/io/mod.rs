//! JSON persistence: scalar and tensor encodings, schemas of the computed
//! structures, and the result envelope written by the command line.

pub mod encode;
pub mod envelope;
pub mod payload;
pub mod schema;

pub use envelope::{from_json, read_envelope, write_atomic, ResultEnvelope, Timing};
pub use payload::{check_payload, DescentJson, EndoJson, ExtractedJson, Payload, StableCoringJson};
pub use schema::{AlgebraJson, BasisJson, BialgebraJson, ComoduleJson, CoringJson, TorHopfJson, UnitJson};

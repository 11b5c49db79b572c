use std::io::Write;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coring::{Convention, Report};
use crate::error::{Error, Result};

use super::payload::Payload;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Timing {
    pub seconds: f64,
}

/// What a verb writes: its inputs, the grading convention of the payload,
/// the payload, the axiom report of the payload and the wall time.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultEnvelope {
    pub inputs: Value,
    pub convention: Convention,
    pub payload: Payload,
    pub report: Report,
    pub timing: Timing,
}

impl ResultEnvelope {
    /// Serialization without the timing, for comparing runs.
    pub fn deterministic_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("serializable");
        v.as_object_mut().expect("object").remove("timing");
        serde_json::to_string(&v).expect("serializable")
    }
}

fn pointer(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        out.push('/');
        match seg {
            Segment::Seq { index } => out.push_str(&index.to_string()),
            Segment::Map { key } => out.push_str(&key.replace('~', "~0").replace('/', "~1")),
            Segment::Enum { variant } => out.push_str(variant),
            Segment::Unknown => out.push('?'),
        }
    }
    out
}

/// Deserializes `T` from JSON text; failures carry the JSON pointer of the
/// offending location, including the name of a missing or unknown field.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let mut path = pointer(e.path());
        let message = e.inner().to_string();
        for marker in ["missing field `", "unknown field `"] {
            if let Some(rest) = message.strip_prefix(marker) {
                if let Some((name, _)) = rest.split_once('`').filter(|(name, _)| !path.ends_with(&format!("/{name}"))) {
                    path.push('/');
                    path.push_str(name);
                }
            }
        }
        if path.is_empty() {
            path.push('/');
        }
        Error::Schema { path, message }
    })
}

pub fn read_envelope(path: &Path) -> Result<ResultEnvelope> {
    from_json(&std::fs::read_to_string(path)?)
}

/// Writes through a sibling temporary file renamed into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let name = path.file_name().ok_or_else(|| Error::Io(std::io::Error::other("output path has no file name")))?;
    let tmp = path.with_file_name(format!(".{}.tmp", name.to_string_lossy()));
    {
        let mut file = std::fs::File::create(&tmp)?;
        file.write_all(contents.as_bytes())?;
        file.sync_all()?;
    }
    std::fs::rename(&tmp, path)?;
    Ok(())
}

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one axiom, checked over every basis instance in range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxiomResult {
    pub axiom: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Instances outside the computed truncation, left unchecked.
    #[serde(default, skip_serializing_if = "is_zero")]
    pub skipped: usize,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub entries: Vec<AxiomResult>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, axiom: &str, witness: Option<String>, skipped: usize) {
        let status = if witness.is_some() { Status::Fail } else { Status::Pass };
        self.entries.push(AxiomResult { axiom: axiom.to_string(), status, witness, skipped });
    }

    pub fn pass(&mut self, axiom: &str) {
        self.push(axiom, None, 0);
    }

    pub fn fail(&mut self, axiom: &str, witness: impl Into<String>) {
        self.push(axiom, Some(witness.into()), 0);
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    /// Prefixes every axiom name, for reports of sub-objects.
    pub fn prefixed(mut self, prefix: &str) -> Report {
        for e in &mut self.entries {
            e.axiom = format!("{prefix}: {}", e.axiom);
        }
        self
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn failures(&self) -> Vec<&AxiomResult> {
        self.entries.iter().filter(|e| e.status == Status::Fail).collect()
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomResult> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }
}

/// Collects the first counterexample of an axiom across basis instances.
pub struct AxiomCheck {
    name: String,
    witness: Option<String>,
    skipped: usize,
}

impl AxiomCheck {
    pub fn new(name: &str) -> Self {
        AxiomCheck { name: name.to_string(), witness: None, skipped: 0 }
    }

    pub fn failed(&self) -> bool {
        self.witness.is_some()
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    /// Records `witness` unless a witness is already known.
    pub fn require(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub fn finish(self, report: &mut Report) {
        report.push(&self.name, self.witness, self.skipped);
    }
}

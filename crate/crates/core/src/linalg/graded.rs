use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite graded vector space given by a labelled, graded basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradedVectorSpace {
    pub degrees: Vec<i64>,
    pub labels: Vec<String>,
}

impl GradedVectorSpace {
    pub fn new(degrees: Vec<i64>, labels: Vec<String>) -> Result<Self> {
        if degrees.len() != labels.len() {
            return Err(Error::DimensionMismatch("one label per basis vector".into()));
        }
        let mut seen = std::collections::HashSet::new();
        if !labels.iter().all(|l| seen.insert(l)) {
            return Err(Error::DimensionMismatch("labels must be unique".into()));
        }
        Ok(GradedVectorSpace { degrees, labels })
    }

    /// Basis `v0, v1, …` concentrated in degree `degree`.
    pub fn concentrated(dim: usize, degree: i64) -> Self {
        GradedVectorSpace { degrees: vec![degree; dim], labels: (0..dim).map(|i| format!("v{i}")).collect() }
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    /// Dimension per degree.
    pub fn dims(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for d in &self.degrees {
            *m.entry(*d).or_insert(0) += 1;
        }
        m
    }

    pub fn dim_in(&self, degree: i64) -> usize {
        self.degrees.iter().filter(|&&d| d == degree).count()
    }
}

/// `v(n)`: the degree-`d` part of the result is the degree-`(d-n)` part of
/// `v`.
pub fn shift(v: &GradedVectorSpace, n: i64) -> GradedVectorSpace {
    GradedVectorSpace { degrees: v.degrees.iter().map(|d| d + n).collect(), labels: v.labels.clone() }
}

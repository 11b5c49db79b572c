//! JSON forms of the computed structures. Every struct rejects unknown
//! fields; conversions back validate indices and scalars and report the
//! offending location as a JSON pointer relative to `base`.

use serde::{Deserialize, Serialize};

use crate::algebra::GradedAlgebra;
use crate::bar::TorHopf;
use crate::comodule::Comodule;
use crate::coring::{BasisElement, Bialgebra, Convention, Coring, Truncation};
use crate::error::Result;
use crate::linalg::{Field, GradedVectorSpace, SparseVec};

use super::encode::*;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisJson {
    pub label: String,
    pub hdeg: i64,
    pub ideg: i64,
    pub parity: u8,
}

fn encode_basis(b: &[BasisElement]) -> Vec<BasisJson> {
    b.iter().map(|e| BasisJson { label: e.label.clone(), hdeg: e.degree, ideg: e.weight, parity: e.parity }).collect()
}

fn decode_basis(b: &[BasisJson]) -> Vec<BasisElement> {
    b.iter().map(|e| BasisElement::new(e.label.clone(), e.hdeg, e.ideg, e.parity)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraBasisJson {
    pub label: String,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub field: String,
    pub basis: Vec<AlgebraBasisJson>,
    pub mult: Vec<Entry3>,
    pub unit: Vec<Entry1>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub augmentation: Option<Vec<Entry1>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<i64>,
    pub generators: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub words: Option<Vec<Vec<usize>>>,
}

impl AlgebraJson {
    pub fn encode(a: &GradedAlgebra) -> Self {
        let f = &a.field;
        AlgebraJson {
            field: field_string(f),
            basis: (0..a.dim()).map(|i| AlgebraBasisJson { label: a.label(i).into(), degree: a.degree(i) }).collect(),
            mult: encode_table3(f, &a.mult, a.dim()),
            unit: encode_vec(f, &a.unit),
            augmentation: a.augmentation.as_ref().map(|v| encode_vec(f, v)),
            degree_bound: a.degree_bound,
            generators: a.generators.clone(),
            words: a.words.clone(),
        }
    }

    pub fn decode(&self, base: &str) -> Result<GradedAlgebra> {
        let f = parse_field(&self.field, &format!("{base}/field"))?;
        let n = self.basis.len();
        let mult = decode_table3(&f, &self.mult, n * n, 1, n, &format!("{base}/mult"))?;
        for (e, g) in self.generators.iter().enumerate() {
            if *g >= n {
                return Err(schema(&format!("{base}/generators/{e}"), "index out of range"));
            }
        }
        Ok(GradedAlgebra {
            field: f.clone(),
            space: GradedVectorSpace {
                degrees: self.basis.iter().map(|b| b.degree).collect(),
                labels: self.basis.iter().map(|b| b.label.clone()).collect(),
            },
            mult,
            unit: decode_vec(&f, &self.unit, n, &format!("{base}/unit"))?,
            augmentation: self.augmentation.as_ref().map(|v| decode_vec(&f, v, n, &format!("{base}/augmentation"))).transpose()?,
            degree_bound: self.degree_bound,
            generators: self.generators.clone(),
            words: self.words.clone(),
        })
    }
}

/// A unit given as a basis index or as a vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum UnitJson {
    Index(usize),
    Vector(Vec<Entry1>),
}

fn encode_unit(f: &Field, u: &SparseVec) -> UnitJson {
    match u.entries() {
        [(i, c)] if f.is_one(c) => UnitJson::Index(*i),
        _ => UnitJson::Vector(encode_vec(f, u)),
    }
}

fn decode_unit(f: &Field, u: &UnitJson, n: usize, path: &str) -> Result<SparseVec> {
    match u {
        UnitJson::Index(i) if *i < n => Ok(SparseVec::unit(*i, f)),
        UnitJson::Index(i) => Err(schema(path, format!("index {i} out of range 0..{n}"))),
        UnitJson::Vector(v) => decode_vec(f, v, n, path),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraJson {
    pub field: String,
    pub convention: Convention,
    pub basis: Vec<BasisJson>,
    pub mult: Vec<Entry3>,
    pub comult: Vec<Entry3>,
    pub counit: Vec<Entry1>,
    pub unit: UnitJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Entry2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<Truncation>,
}

impl BialgebraJson {
    pub fn encode(b: &Bialgebra) -> Self {
        let f = &b.field;
        let n = b.dim();
        BialgebraJson {
            field: field_string(f),
            convention: b.convention,
            basis: encode_basis(&b.basis),
            mult: encode_table3(f, &b.mult, n),
            comult: encode_table3(f, &b.comult, n),
            counit: encode_vec(f, &b.counit),
            unit: encode_unit(f, &b.unit),
            antipode: b.antipode.as_ref().map(|s| encode_matrix(f, s)),
            truncation: b.truncation,
        }
    }

    pub fn decode(&self, base: &str) -> Result<Bialgebra> {
        let f = parse_field(&self.field, &format!("{base}/field"))?;
        let n = self.basis.len();
        Ok(Bialgebra {
            convention: self.convention,
            basis: decode_basis(&self.basis),
            mult: decode_table3(&f, &self.mult, n * n, 1, n, &format!("{base}/mult"))?,
            comult: decode_table3(&f, &self.comult, n, n, n, &format!("{base}/comult"))?,
            counit: decode_vec(&f, &self.counit, n, &format!("{base}/counit"))?,
            unit: decode_unit(&f, &self.unit, n, &format!("{base}/unit"))?,
            antipode: self.antipode.as_ref().map(|s| decode_matrix(&f, s, n, n, &format!("{base}/antipode"))).transpose()?,
            truncation: self.truncation,
            field: f,
        })
    }
}

/// The Hopf algebra `Tor^R(k, k)` with bar-complex representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorHopfJson {
    pub field: String,
    pub convention: Convention,
    pub basis: Vec<BasisJson>,
    pub mult: Vec<Entry3>,
    pub comult: Vec<Entry3>,
    pub counit: Vec<Entry1>,
    pub unit: UnitJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Entry2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<Truncation>,
    pub n_max: usize,
    pub d_max: i64,
    /// `[i, index, x]`: coordinate of the bar-complex cycle representing `e_i`.
    pub representatives: Vec<Entry2>,
}

impl TorHopfJson {
    pub fn encode(t: &TorHopf) -> Self {
        let h = BialgebraJson::encode(&t.hopf);
        TorHopfJson {
            field: h.field,
            convention: h.convention,
            basis: h.basis,
            mult: h.mult,
            comult: h.comult,
            counit: h.counit,
            unit: h.unit,
            antipode: h.antipode,
            truncation: h.truncation,
            n_max: t.n_max,
            d_max: t.d_max,
            representatives: encode_table(&t.hopf.field, &t.representatives),
        }
    }

    pub fn decode(&self, base: &str) -> Result<TorHopf> {
        let h = BialgebraJson {
            field: self.field.clone(),
            convention: self.convention,
            basis: self.basis.clone(),
            mult: self.mult.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            unit: self.unit.clone(),
            antipode: self.antipode.clone(),
            truncation: self.truncation,
        }
        .decode(base)?;
        let n = h.dim();
        let representatives = decode_table(&h.field, &self.representatives, n, usize::MAX, &format!("{base}/representatives"))?;
        let bidegrees = h.basis.iter().map(|b| (b.degree.max(0) as usize, b.weight)).collect();
        Ok(TorHopf { hopf: h, bidegrees, representatives, n_max: self.n_max, d_max: self.d_max })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoringJson {
    pub field: String,
    pub base: AlgebraJson,
    pub basis: Vec<BasisJson>,
    /// `[t, i, j, x]`: `e_t · c_j ∋ x c_i`.
    pub left_action: Vec<Entry3>,
    pub right_action: Vec<Entry3>,
    pub comult: Vec<Entry3>,
    /// `[i, t, x]`: `ε(c_i) ∋ x e_t`.
    pub counit: Vec<Entry2>,
}

impl CoringJson {
    pub fn encode(c: &Coring) -> Self {
        let f = c.field();
        CoringJson {
            field: field_string(f),
            base: AlgebraJson::encode(&c.base),
            basis: encode_basis(&c.basis),
            left_action: encode_actions(f, &c.left),
            right_action: encode_actions(f, &c.right),
            comult: encode_table3(f, &c.comult, c.dim()),
            counit: encode_table(f, &c.counit),
        }
    }

    pub fn decode(&self, base: &str) -> Result<Coring> {
        let r = self.base.decode(&format!("{base}/base"))?;
        let f = parse_field(&self.field, &format!("{base}/field"))?;
        if f != r.field {
            return Err(schema(&format!("{base}/field"), "differs from the field of the base algebra"));
        }
        let (n, rd) = (self.basis.len(), r.dim());
        Ok(Coring {
            basis: decode_basis(&self.basis),
            left: decode_actions(&f, &self.left_action, rd, n, &format!("{base}/left_action"))?,
            right: decode_actions(&f, &self.right_action, rd, n, &format!("{base}/right_action"))?,
            comult: decode_table3(&f, &self.comult, n, n, n, &format!("{base}/comult"))?,
            counit: decode_table(&f, &self.counit, n, rd, &format!("{base}/counit"))?,
            base: r,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleJson {
    pub coring_ref: CoringJson,
    pub space: GradedVectorSpace,
    pub ideg: Vec<i64>,
    pub parity: Vec<u8>,
    /// `[t, i, j, x]`: `m_j · e_t ∋ x m_i`.
    pub action: Vec<Entry3>,
    /// `[i, j, k, x]`: `ρ(m_i) ∋ x m_j ⊗ c_k`.
    pub coaction: Vec<Entry3>,
}

impl ComoduleJson {
    pub fn encode(m: &Comodule) -> Self {
        let f = m.field();
        ComoduleJson {
            coring_ref: CoringJson::encode(&m.coring),
            space: GradedVectorSpace {
                degrees: m.basis.iter().map(|b| b.degree).collect(),
                labels: m.basis.iter().map(|b| b.label.clone()).collect(),
            },
            ideg: m.basis.iter().map(|b| b.weight).collect(),
            parity: m.basis.iter().map(|b| b.parity).collect(),
            action: encode_actions(f, &m.action),
            coaction: encode_table3(f, &m.coaction, m.coring.dim()),
        }
    }

    pub fn decode(&self, base: &str) -> Result<Comodule> {
        let coring = self.coring_ref.decode(&format!("{base}/coring_ref"))?;
        let f = coring.field().clone();
        let n = self.space.degrees.len();
        if self.space.labels.len() != n || self.ideg.len() != n || self.parity.len() != n {
            return Err(schema(&format!("{base}/space"), "degree, label, ideg and parity lists differ in length"));
        }
        let basis = (0..n).map(|i| BasisElement::new(self.space.labels[i].clone(), self.space.degrees[i], self.ideg[i], self.parity[i])).collect();
        Ok(Comodule {
            action: decode_actions(&f, &self.action, coring.base.dim(), n, &format!("{base}/action"))?,
            coaction: decode_table3(&f, &self.coaction, n, n, coring.dim(), &format!("{base}/coaction"))?,
            coring,
            basis,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_presentation, realize};
    use crate::bar::tor_bialgebra;
    use crate::coring::{exterior_bialgebra, galois_coring, DegreeMode, GaloisExtension};

    #[test]
    fn tor_round_trip() {
        let a = realize(&parse_presentation("GF(3)[x]/(x^3)").unwrap(), 12).unwrap();
        let t = tor_bialgebra(&a, 3).unwrap();
        let json = serde_json::to_string(&TorHopfJson::encode(&t)).unwrap();
        let back: TorHopfJson = serde_json::from_str(&json).unwrap();
        let t2 = back.decode("").unwrap();
        assert_eq!(t2.hopf, t.hopf);
        assert_eq!(t2.bidegrees, t.bidegrees);
        assert_eq!(t2.representatives, t.representatives);
    }

    #[test]
    fn coring_and_comodule_round_trip() {
        let g = GaloisExtension::new(&Field::gaussian_rationals()).unwrap();
        let c = galois_coring(&g);
        assert_eq!(CoringJson::encode(&c).decode("").unwrap(), c);
        let m = Comodule::regular(&c);
        assert_eq!(ComoduleJson::encode(&m).decode("").unwrap(), m);
        let e = exterior_bialgebra(2, DegreeMode::Graded, &Field::prime(5).unwrap());
        assert_eq!(BialgebraJson::encode(&e).decode("").unwrap(), e);
    }

    #[test]
    fn bad_index_is_located() {
        let e = exterior_bialgebra(1, DegreeMode::Graded, &Field::rationals());
        let mut j = BialgebraJson::encode(&e);
        j.comult[0].1 = 7;
        let err = j.decode("/payload").unwrap_err();
        assert!(matches!(err, crate::Error::Schema { ref path, .. } if path == "/payload/comult/0"), "{err:?}");
    }
}

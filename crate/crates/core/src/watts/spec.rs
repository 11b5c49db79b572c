//! Comonads `F_n⋯F_i U_i⋯U_n` built from base change `F = − ⊗_A S` and
//! restriction `U` along a chain of graded algebra maps, acting on finite
//! dimensional graded right modules over the last ring.

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_element, parse_presentation, realize, AlgebraMap, GradedAlgebra};
use crate::coring::{Bimodule, RelTensor};
use crate::error::{Error, Result};
use crate::linalg::{Field, SparseMatrix, SparseVec};

use super::module::RightModule;

/// Parses a ring: a presentation `FIELD[vars]/(relations)`, a bare field
/// `Q` or `GF(p)`, or one of the extensions `Q(i)` and `GF(4)` viewed as
/// algebras over their prime fields.
pub fn parse_ring(text: &str, degree_bound: i64) -> Result<GradedAlgebra> {
    let t = text.trim();
    let extension = |field: Field, name: &str| -> Result<GradedAlgebra> {
        let mut a = GradedAlgebra::from_extension(&field)?;
        a.space.labels[1] = name.to_string();
        Ok(a)
    };
    match t {
        "Q(i)" => return extension(Field::gaussian_rationals(), "i"),
        "GF(4)" => return extension(Field::finite(2, &[1, 1, 1])?, "w"),
        "Q" => return Ok(GradedAlgebra::ground(&Field::rationals())),
        _ => {}
    }
    if let Some(p) = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')).and_then(|r| r.trim().parse::<u64>().ok()) {
        return Ok(GradedAlgebra::ground(&Field::prime(p)?));
    }
    realize(&parse_presentation(t)?, degree_bound)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapJson {
    pub from: usize,
    pub to: usize,
    /// One element of the target per generator of the source.
    pub images: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComonadSpecJson {
    pub rings: Vec<String>,
    pub maps: Vec<MapJson>,
    pub pattern: String,
}

/// A map of the chain between `rings[from]` and `rings[to]`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub from: usize,
    pub to: usize,
    pub map: AlgebraMap,
}

#[derive(Clone, Debug)]
pub struct ComonadSpec {
    pub rings: Vec<GradedAlgebra>,
    pub maps: Vec<ChainMap>,
    pub pattern: String,
    /// Maps `start..maps.len()` (0-based) enter the composite.
    pub start: usize,
    /// `ψ = ψ_n ∘ ⋯ ∘ ψ_i`.
    pub composite: AlgebraMap,
}

/// `T(M) = M ⊗_A S` as a quotient of `M ⊗_k S`.
#[derive(Clone, Debug)]
pub struct Evaluated {
    pub tensor: RelTensor,
    pub module: RightModule,
}

impl Evaluated {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

/// Reads an adjunction word into `(letter, index)` tokens. A bare letter
/// means index 1 and is only accepted for a single map.
fn tokens(pattern: &str, maps: usize) -> Result<Vec<(char, usize)>> {
    let bad = |why: &str| Error::NotAComonad(format!("pattern {pattern:?}: {why}"));
    let mut out = Vec::new();
    let mut chars = pattern.trim().chars().peekable();
    while let Some(c) = chars.next() {
        if c != 'F' && c != 'U' {
            return Err(bad(&format!("unexpected {c:?}")));
        }
        let mut digits = String::new();
        while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
            digits.push(*d);
            chars.next();
        }
        let index = if digits.is_empty() {
            if maps != 1 {
                return Err(bad("unindexed letter with several maps"));
            }
            1
        } else {
            digits.parse().map_err(|_| bad("index out of range"))?
        };
        out.push((c, index));
    }
    Ok(out)
}

impl ComonadSpec {
    pub fn new(rings: Vec<GradedAlgebra>, maps: Vec<ChainMap>, pattern: &str) -> Result<Self> {
        let n = maps.len();
        if n == 0 || rings.is_empty() {
            return Err(Error::NotAComonad("no maps".into()));
        }
        let toks = tokens(pattern, n)?;
        let k = toks.len() / 2;
        let shape = || Error::NotAComonad(format!("pattern {pattern:?} is not of the form F_n⋯F_i U_i⋯U_n"));
        if toks.len() % 2 != 0 || k == 0 || k > n {
            return Err(shape());
        }
        let start = n - k;
        for (pos, &(c, idx)) in toks.iter().enumerate() {
            let expected = if pos < k { ('F', n - pos) } else { ('U', start + 1 + (pos - k)) };
            if (c, idx) != expected {
                return Err(shape());
            }
        }
        let last = rings.len() - 1;
        for (q, m) in maps.iter().enumerate() {
            if m.from > last || m.to > last {
                return Err(Error::NotAComonad(format!("map {} refers to a missing ring", q + 1)));
            }
        }
        if maps[n - 1].to != last {
            return Err(Error::NotAComonad("the chain does not end at the last ring".into()));
        }
        for q in start..n - 1 {
            if maps[q].to != maps[q + 1].from {
                return Err(Error::NotAComonad(format!("maps {} and {} are not composable", q + 1, q + 2)));
            }
        }
        for m in &maps {
            m.map.verify()?;
        }
        let first = &maps[start].map;
        let mut matrix = first.matrix.clone();
        for m in &maps[start + 1..] {
            matrix = m.map.matrix.compose(&matrix)?;
        }
        let composite = AlgebraMap { source: first.source.clone(), target: rings[last].clone(), matrix };
        Ok(ComonadSpec { rings, maps, pattern: pattern.trim().to_string(), start, composite })
    }

    /// `FU` along a single map.
    pub fn along(map: AlgebraMap) -> Result<Self> {
        let rings = vec![map.source.clone(), map.target.clone()];
        ComonadSpec::new(rings, vec![ChainMap { from: 0, to: 1, map }], "FU")
    }

    pub fn identity(s: &GradedAlgebra) -> Self {
        ComonadSpec::along(AlgebraMap::identity(s)).expect("identity is an algebra map")
    }

    pub fn from_json(json: &ComonadSpecJson, degree_bound: i64) -> Result<Self> {
        let rings = json.rings.iter().map(|r| parse_ring(r, degree_bound)).collect::<Result<Vec<_>>>()?;
        let mut maps = Vec::with_capacity(json.maps.len());
        for (q, m) in json.maps.iter().enumerate() {
            let (Some(src), Some(tgt)) = (rings.get(m.from), rings.get(m.to)) else {
                return Err(Error::NotAComonad(format!("map {} refers to a missing ring", q + 1)));
            };
            let images = m.images.iter().map(|s| parse_element(tgt, s)).collect::<Result<Vec<SparseVec>>>()?;
            maps.push(ChainMap { from: m.from, to: m.to, map: AlgebraMap::from_generator_images(src, tgt, &images)? });
        }
        ComonadSpec::new(rings, maps, &json.pattern)
    }

    /// The ring `S` the comonad acts on.
    pub fn target(&self) -> &GradedAlgebra {
        &self.composite.target
    }

    pub fn field(&self) -> &Field {
        &self.target().field
    }

    /// `T(M)`.
    pub fn evaluate(&self, m: &RightModule) -> Evaluated {
        let s = self.target();
        let f = &s.field;
        let psi: Vec<SparseVec> = (0..self.composite.source.dim()).map(|a| self.composite.matrix.column(a).clone()).collect();
        let restricted = Bimodule { dim: m.dim(), left: vec![], right: psi.iter().map(|x| m.act_matrix(x)).collect() };
        let base = Bimodule {
            dim: s.dim(),
            left: psi.iter().map(|x| s.left_mult(x)).collect(),
            right: (0..s.dim()).map(|t| s.right_mult(&SparseVec::unit(t, f))).collect(),
        };
        let tensor = RelTensor::new(f, &restricted, &base);
        let degrees = (0..tensor.dim())
            .map(|q| {
                let (i, j) = tensor.representative(q);
                m.degrees[i] + s.degree(j)
            })
            .collect();
        let module = RightModule { field: f.clone(), degrees, action: tensor.module.right.clone() };
        Evaluated { tensor, module }
    }

    /// `T(g)` for a module map `g: M → N`, given `T(M)` and `T(N)`.
    pub fn map(&self, tm: &Evaluated, tn: &Evaluated, g: &SparseMatrix) -> SparseMatrix {
        let f = self.field();
        let cols = (0..tm.dim())
            .map(|q| {
                let (i, j) = tm.tensor.representative(q);
                tn.tensor.project_pair(g.column(i), &SparseVec::unit(j, f))
            })
            .collect();
        SparseMatrix::from_columns(f, tn.dim(), cols)
    }

    /// The counit `ε_M: T(M) → M`, `m ⊗ s ↦ m·s`.
    pub fn counit(&self, m: &RightModule, tm: &Evaluated) -> SparseMatrix {
        let cols = (0..tm.dim())
            .map(|q| {
                let (i, j) = tm.tensor.representative(q);
                m.action[j].column(i).clone()
            })
            .collect();
        SparseMatrix::from_columns(self.field(), m.dim(), cols)
    }

    /// The comultiplication `Δ_M: T(M) → T(T(M))`, `m ⊗ s ↦ (m ⊗ 1) ⊗ s`,
    /// the unit of the adjunction whiskered by `F` and `U`.
    pub fn comult(&self, tm: &Evaluated, ttm: &Evaluated) -> SparseMatrix {
        let f = self.field();
        let unit = &self.target().unit;
        let cols = (0..tm.dim())
            .map(|q| {
                let (i, j) = tm.tensor.representative(q);
                let inner = tm.tensor.project_pair(&SparseVec::unit(i, f), unit);
                ttm.tensor.project_pair(&inner, &SparseVec::unit(j, f))
            })
            .collect();
        SparseMatrix::from_columns(f, ttm.dim(), cols)
    }
}

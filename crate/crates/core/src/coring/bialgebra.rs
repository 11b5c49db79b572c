use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Accumulator, Field, Scalar, SparseMatrix, SparseVec};

use super::coring::{tensor_map, BasisElement, Coring};
use super::report::{AxiomCheck, Report};

/// How stored degrees are to be read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Non-negative homological degrees; a class of degree `n` has
    /// cohomological degree `−n`.
    Homological,
    /// Degrees of a graded dual: the stored number `n` stands for `−n` in
    /// the grading of the object it was dualized from.
    Cohomological,
    Ungraded,
}

impl Convention {
    pub fn dual(self) -> Convention {
        match self {
            Convention::Homological => Convention::Cohomological,
            Convention::Cohomological => Convention::Homological,
            Convention::Ungraded => Convention::Ungraded,
        }
    }
}

/// Region of `(degree, weight)` in which structure constants are known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Truncation {
    pub s_max: i64,
    pub d_max: i64,
    /// Set when every basis element outside the region is known to vanish,
    /// so the stored object is the whole object.
    pub complete: bool,
}

impl Truncation {
    pub fn contains(&self, degree: i64, weight: i64) -> bool {
        degree <= self.s_max && weight <= self.d_max
    }
}

/// A bialgebra over a field by structure constants. Index conventions:
/// `mult[i * n + j] = e_i e_j`, `comult[i] ∈ C ⊗ C` with index `j * n + k`,
/// `counit` a functional, `unit` a vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    pub field: Field,
    pub convention: Convention,
    pub basis: Vec<BasisElement>,
    pub mult: Vec<SparseVec>,
    pub unit: SparseVec,
    pub comult: Vec<SparseVec>,
    pub counit: SparseVec,
    pub antipode: Option<SparseMatrix>,
    pub truncation: Option<Truncation>,
}

impl Bialgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.basis[i].parity
    }

    /// Whether products of total `(degree, weight)` are stored.
    pub fn known(&self, degree: i64, weight: i64) -> bool {
        self.truncation.is_none_or(|t| t.contains(degree, weight))
    }

    pub fn pair_known(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.basis[i], &self.basis[j]);
        self.known(a.degree + b.degree, a.weight + b.weight)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim() + j]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let f = &self.field;
        let mut acc = Accumulator::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_scaled(&f.mul(x, y), self.mul_basis(*i, *j), f);
            }
        }
        acc.finish(f)
    }

    pub fn comult_of(&self, v: &SparseVec) -> SparseVec {
        let f = &self.field;
        let mut acc = Accumulator::new();
        for (i, c) in v.iter() {
            acc.add_scaled(c, &self.comult[*i], f);
        }
        acc.finish(f)
    }

    pub fn counit_of(&self, v: &SparseVec) -> Scalar {
        self.counit.dot(v, &self.field)
    }

    /// Product in `B ⊗ B` with the Koszul sign of the parity grading:
    /// `(a⊗b)(c⊗d) = (−1)^{|b||c|} ac ⊗ bd`.
    pub fn mul_tensor(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let f = &self.field;
        let n = self.dim();
        let mut acc = Accumulator::new();
        for (i1, c1) in x.iter() {
            let (a, b) = (i1 / n, i1 % n);
            for (i2, c2) in y.iter() {
                let (c, d) = (i2 / n, i2 % n);
                let mut coeff = f.mul(c1, c2);
                if self.parity(b) * self.parity(c) == 1 {
                    coeff = f.neg(&coeff);
                }
                let ac = self.mul_basis(a, c);
                let bd = self.mul_basis(b, d);
                if ac.is_zero() || bd.is_zero() {
                    continue;
                }
                acc.add_scaled(&coeff, &ac.tensor(bd, n, f), f);
            }
        }
        acc.finish(f)
    }

    /// The underlying coalgebra as a coring over the ground field.
    pub fn coring(&self) -> Coring {
        Coring::from_coalgebra(&self.field, self.basis.clone(), self.comult.clone(), &self.counit)
    }

    /// Checks the coalgebra, algebra and compatibility axioms. Instances
    /// whose total bidegree leaves the truncation are skipped and counted.
    pub fn check(&self) -> Report {
        let f = &self.field;
        let n = self.dim();
        let e = |i: usize| SparseVec::unit(i, f);
        let mut report = self.coring().check();
        report.entries.retain(|r| r.axiom != "bimodule" && !r.axiom.contains("bimodule map"));

        let mut unit = AxiomCheck::new("unit law");
        for i in 0..n {
            unit.require(self.mul(&self.unit, &e(i)) == e(i), || format!("1·{0} ≠ {0}", self.label(i)));
            unit.require(self.mul(&e(i), &self.unit) == e(i), || format!("{0}·1 ≠ {0}", self.label(i)));
        }
        unit.finish(&mut report);

        let mut assoc = AxiomCheck::new("associativity");
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (a, b, c) = (&self.basis[i], &self.basis[j], &self.basis[k]);
                    if !self.known(a.degree + b.degree + c.degree, a.weight + b.weight + c.weight) {
                        assoc.skip();
                        continue;
                    }
                    let lhs = self.mul(self.mul_basis(i, j), &e(k));
                    let rhs = self.mul(&e(i), self.mul_basis(j, k));
                    assoc.require(lhs == rhs, || format!("({}·{})·{} ≠ {}·({}·{})", self.label(i), self.label(j), self.label(k), self.label(i), self.label(j), self.label(k)));
                }
            }
        }
        assoc.finish(&mut report);

        let mut delta_unit = AxiomCheck::new("comultiplication is unital");
        delta_unit.require(self.comult_of(&self.unit) == self.unit.tensor(&self.unit, n, f), || "Δ(1) ≠ 1⊗1".into());
        delta_unit.finish(&mut report);
        let mut eps_unit = AxiomCheck::new("counit is unital");
        eps_unit.require(f.is_one(&self.counit_of(&self.unit)), || "ε(1) ≠ 1".into());
        eps_unit.finish(&mut report);

        let mut delta_mult = AxiomCheck::new("comultiplication is multiplicative");
        let mut eps_mult = AxiomCheck::new("counit is multiplicative");
        for i in 0..n {
            for j in 0..n {
                if !self.pair_known(i, j) {
                    delta_mult.skip();
                    eps_mult.skip();
                    continue;
                }
                let lhs = self.comult_of(self.mul_basis(i, j));
                let rhs = self.mul_tensor(&self.comult[i], &self.comult[j]);
                delta_mult.require(lhs == rhs, || format!("Δ({0}·{1}) ≠ Δ({0})·Δ({1})", self.label(i), self.label(j)));
                let lhs = self.counit_of(self.mul_basis(i, j));
                let rhs = f.mul(&self.counit.get(i, f), &self.counit.get(j, f));
                eps_mult.require(lhs == rhs, || format!("ε({0}·{1}) ≠ ε({0})ε({1})", self.label(i), self.label(j)));
            }
        }
        delta_mult.finish(&mut report);
        eps_mult.finish(&mut report);
        if self.convention != Convention::Ungraded {
            self.check_homogeneous(&mut report);
        }
        report
    }

    /// Every structure constant joins basis elements whose degrees and
    /// weights add up.
    fn check_homogeneous(&self, report: &mut Report) {
        let n = self.dim();
        let bd = |i: usize| (self.basis[i].degree, self.basis[i].weight);
        let add = |(a, b): (i64, i64), (c, d): (i64, i64)| (a + c, b + d);
        let mut graded = AxiomCheck::new("structure maps preserve the grading");
        for (i, j) in (0..n).flat_map(|i| (0..n).map(move |j| (i, j))) {
            for (k, _) in self.mul_basis(i, j).iter() {
                graded.require(bd(*k) == add(bd(i), bd(j)), || format!("{}·{} ∋ {}", self.label(i), self.label(j), self.label(*k)));
            }
        }
        for i in 0..n {
            for (idx, _) in self.comult[i].iter() {
                let (j, k) = (idx / n, idx % n);
                graded.require(bd(i) == add(bd(j), bd(k)), || format!("Δ({}) ∋ {}⊗{}", self.label(i), self.label(j), self.label(k)));
            }
        }
        for (i, _) in self.counit.iter().chain(self.unit.iter()) {
            graded.require(bd(*i) == (0, 0), || format!("unit or counit involves {}", self.label(*i)));
        }
        if let Some(s) = &self.antipode {
            for (i, col) in s.columns().iter().enumerate() {
                for (j, _) in col.iter() {
                    graded.require(bd(*j) == bd(i), || format!("S({}) ∋ {}", self.label(i), self.label(*j)));
                }
            }
        }
        graded.finish(report);
    }

    /// [`Bialgebra::check`] plus both antipode laws.
    pub fn check_hopf(&self) -> Report {
        let mut report = self.check();
        let f = &self.field;
        let n = self.dim();
        let Some(s) = &self.antipode else {
            report.fail("antipode present", "no antipode");
            return report;
        };
        let mut left = AxiomCheck::new("left antipode law");
        let mut right = AxiomCheck::new("right antipode law");
        for i in 0..n {
            let expected = self.unit.scale(&self.counit.get(i, f), f);
            let mut l = Accumulator::new();
            let mut r = Accumulator::new();
            for (idx, c) in self.comult[i].iter() {
                let (x, y) = (idx / n, idx % n);
                l.add_scaled(c, &self.mul(s.column(x), &SparseVec::unit(y, f)), f);
                r.add_scaled(c, &self.mul(&SparseVec::unit(x, f), s.column(y)), f);
            }
            left.require(l.finish(f) == expected, || format!("∇(S⊗id)Δ({0}) ≠ ε({0})1", self.label(i)));
            right.require(r.finish(f) == expected, || format!("∇(id⊗S)Δ({0}) ≠ ε({0})1", self.label(i)));
        }
        left.finish(&mut report);
        right.finish(&mut report);
        report
    }

    /// Basis of `{x : Δ(x) = x⊗1 + 1⊗x}`.
    pub fn primitives(&self) -> Vec<SparseVec> {
        let f = &self.field;
        let n = self.dim();
        let cols = (0..n)
            .map(|i| {
                let e = SparseVec::unit(i, f);
                self.comult[i].sub(&e.tensor(&self.unit, n, f), f).sub(&self.unit.tensor(&e, n, f), f)
            })
            .collect();
        SparseMatrix::from_columns(f, n * n, cols).kernel()
    }

    /// Grouplike elements `Δ(g) = g⊗g`, `ε(g) = 1`. Over a finite field all
    /// vectors with `ε = 1` are enumerated when there are at most `2^16`;
    /// otherwise only rescaled basis vectors are candidates.
    pub fn grouplikes(&self) -> Vec<SparseVec> {
        let f = &self.field;
        let n = self.dim();
        let is_grouplike = |g: &SparseVec| f.is_one(&self.counit_of(g)) && self.comult_of(g) == g.tensor(g, n, f);
        let mut out = Vec::new();
        let small = f.order().filter(|&q| (q as f64).powi(n as i32) <= 65536.0);
        if let (Some(_), Some(elements)) = (small, f.elements()) {
            let q = elements.len();
            let total = q.pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let dense: Vec<Scalar> = (0..n)
                    .map(|_| {
                        let d = elements[c % q].clone();
                        c /= q;
                        d
                    })
                    .collect();
                let g = SparseVec::from_dense(&dense, f);
                if is_grouplike(&g) {
                    out.push(g);
                }
            }
        } else {
            for i in 0..n {
                let c = self.counit.get(i, f);
                if let Ok(inv) = f.inv(&c) {
                    let g = SparseVec::single(i, inv, f);
                    if is_grouplike(&g) {
                        out.push(g);
                    }
                }
            }
        }
        out
    }

    /// Graded commutator `xy − (−1)^{|x||y|} yx` in the parity grading.
    pub fn graded_commutator(&self, x: &SparseVec, px: u8, y: &SparseVec, py: u8) -> SparseVec {
        let f = &self.field;
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        if px * py == 1 {
            xy.add(&yx, f)
        } else {
            xy.sub(&yx, f)
        }
    }

    /// Graded dual: multiplication dual to `Δ`, comultiplication dual to
    /// `∇`, unit and counit exchanged, antipode transposed. The basis keeps
    /// its degree numbers and the convention flips.
    pub fn dual(&self) -> Result<Bialgebra> {
        if let Some(t) = self.truncation {
            if !t.complete {
                return Err(Error::InfiniteDimensional);
            }
        }
        let f = &self.field;
        let n = self.dim();
        let mut mult = vec![Vec::new(); n * n];
        for (i, d) in self.comult.iter().enumerate() {
            for (jk, c) in d.iter() {
                mult[*jk].push((i, c.clone()));
            }
        }
        let mut comult = vec![Vec::new(); n];
        for (jk, m) in self.mult.iter().enumerate() {
            for (i, c) in m.iter() {
                comult[*i].push((jk, c.clone()));
            }
        }
        Ok(Bialgebra {
            field: f.clone(),
            convention: self.convention.dual(),
            basis: self
                .basis
                .iter()
                .map(|b| BasisElement { label: dual_label(&b.label), ..b.clone() })
                .collect(),
            mult: mult.into_iter().map(|t| SparseVec::from_entries(t, f)).collect(),
            unit: self.counit.clone(),
            comult: comult.into_iter().map(|t| SparseVec::from_entries(t, f)).collect(),
            counit: self.unit.clone(),
            antipode: self.antipode.as_ref().map(|s| s.transpose()),
            truncation: None,
        })
    }

    /// The same bialgebra in the basis formed by the columns of `p`.
    pub fn change_basis(&self, p: &SparseMatrix, basis: Vec<BasisElement>) -> Result<Bialgebra> {
        let f = &self.field;
        let n = self.dim();
        if p.rows() != n || p.cols() != n || basis.len() != n {
            return Err(Error::DimensionMismatch(format!("basis change of size {}x{} for dimension {n}", p.rows(), p.cols())));
        }
        let inv = p.inverse()?;
        let mut mult = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                mult.push(inv.apply(&self.mul(p.column(i), p.column(j))));
            }
        }
        let comult = (0..n).map(|i| tensor_map(&self.comult_of(p.column(i)), n, Some(&inv), Some(&inv), f)).collect();
        let counit = SparseVec::from_entries((0..n).map(|i| (i, self.counit_of(p.column(i)))).collect(), f);
        let antipode = match &self.antipode {
            Some(s) => Some(inv.compose(&s.compose(p)?)?),
            None => None,
        };
        Ok(Bialgebra { basis, mult, unit: inv.apply(&self.unit), comult, counit, antipode, ..self.clone() })
    }

    /// Structure constants agree with `other` (labels and metadata aside).
    pub fn same_constants(&self, other: &Bialgebra) -> bool {
        self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

fn dual_label(label: &str) -> String {
    match label.strip_suffix('*') {
        Some(l) => l.to_string(),
        None => format!("{label}*"),
    }
}

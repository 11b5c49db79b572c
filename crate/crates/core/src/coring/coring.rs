use serde::{Deserialize, Serialize};

use crate::algebra::GradedAlgebra;
use crate::linalg::{Accumulator, Field, SparseMatrix, SparseVec};

use super::report::{AxiomCheck, Report};
use super::tensor::{act, Bimodule, RelTensor};

/// Label and gradings of a basis vector.
///
/// `degree` is the grading that is reported, `weight` a non-negative
/// filtration used for connectivity (internal degree, word length), and
/// `parity` the sign grading entering Koszul signs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisElement {
    pub label: String,
    pub degree: i64,
    pub weight: i64,
    pub parity: u8,
}

impl BasisElement {
    pub fn new(label: impl Into<String>, degree: i64, weight: i64, parity: u8) -> Self {
        BasisElement { label: label.into(), degree, weight, parity: parity % 2 }
    }

    pub fn plain(label: impl Into<String>) -> Self {
        BasisElement::new(label, 0, 0, 0)
    }
}

/// A coring over a base algebra `R`: an `R`-bimodule `C` with
/// `Δ: C → C ⊗_R C` and `ε: C → R`.
///
/// `comult[i]` is a lift of `Δ(c_i)` to `C ⊗_k C` (index `j * n + k`);
/// `counit[i]` is `ε(c_i)` in the basis of `R`; `left[t]` and `right[t]`
/// are the actions of the `t`-th basis element of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coring {
    pub base: GradedAlgebra,
    pub basis: Vec<BasisElement>,
    pub left: Vec<SparseMatrix>,
    pub right: Vec<SparseMatrix>,
    pub comult: Vec<SparseVec>,
    pub counit: Vec<SparseVec>,
}

impl Coring {
    pub fn field(&self) -> &Field {
        &self.base.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// A coalgebra over the ground field, as a coring over `k`.
    pub fn from_coalgebra(field: &Field, basis: Vec<BasisElement>, comult: Vec<SparseVec>, counit: &SparseVec) -> Coring {
        let n = basis.len();
        let id = SparseMatrix::identity(field, n);
        let counit = (0..n).map(|i| SparseVec::single(0, counit.get(i, field), field)).collect();
        Coring { base: GradedAlgebra::ground(field), basis, left: vec![id.clone()], right: vec![id], comult, counit }
    }

    pub fn bimodule(&self) -> Bimodule {
        Bimodule { dim: self.dim(), left: self.left.clone(), right: self.right.clone() }
    }

    /// `C ⊗_R C`.
    pub fn square(&self) -> RelTensor {
        let b = self.bimodule();
        RelTensor::new(self.field(), &b, &b)
    }

    /// `Δ(v)` as a lift in `C ⊗_k C`.
    pub fn comult_of(&self, v: &SparseVec) -> SparseVec {
        let f = self.field();
        let mut acc = Accumulator::new();
        for (i, c) in v.iter() {
            acc.add_scaled(c, &self.comult[*i], f);
        }
        acc.finish(f)
    }

    /// `ε(v)` in `R`.
    pub fn counit_of(&self, v: &SparseVec) -> SparseVec {
        let f = self.field();
        let mut acc = Accumulator::new();
        for (i, c) in v.iter() {
            acc.add_scaled(c, &self.counit[*i], f);
        }
        acc.finish(f)
    }

    /// Whether the left and right actions of `R` coincide.
    pub fn acts_symmetrically(&self) -> bool {
        self.left == self.right
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    /// Exact check of every coring axiom on basis elements.
    pub fn check(&self) -> Report {
        let mut report = Report::new();
        let f = self.field().clone();
        let r = &self.base;
        let n = self.dim();
        let m = r.dim();
        let e = |i: usize| SparseVec::unit(i, &f);

        let mut bimod = AxiomCheck::new("bimodule");
        if self.left.len() != m || self.right.len() != m {
            bimod.require(false, || format!("{m} action matrices per side expected"));
        } else {
            for i in 0..n {
                let x = e(i);
                bimod.require(act(&self.left, &r.unit, &x, &f) == x, || format!("1·{} ≠ {}", self.label(i), self.label(i)));
                bimod.require(act(&self.right, &r.unit, &x, &f) == x, || format!("{}·1 ≠ {}", self.label(i), self.label(i)));
                for s in 0..m {
                    for t in 0..m {
                        if !r.in_range(r.degree(s) + r.degree(t)) {
                            continue;
                        }
                        let st = r.mul_basis(s, t);
                        let lhs = self.left[s].apply(&self.left[t].apply(&x));
                        bimod.require(lhs == act(&self.left, st, &x, &f), || {
                            format!("({}·{})·{} ≠ {}·({}·{})", r.label(s), r.label(t), self.label(i), r.label(s), r.label(t), self.label(i))
                        });
                        let rhs = self.right[t].apply(&self.right[s].apply(&x));
                        bimod.require(rhs == act(&self.right, st, &x, &f), || {
                            format!("{}·({}·{}) ≠ ({}·{})·{}", self.label(i), r.label(s), r.label(t), self.label(i), r.label(s), r.label(t))
                        });
                        let lr = self.left[s].apply(&self.right[t].apply(&x));
                        let rl = self.right[t].apply(&self.left[s].apply(&x));
                        bimod.require(lr == rl, || format!("left and right actions on {} do not commute", self.label(i)));
                    }
                }
            }
        }
        let bimodule_ok = !bimod.failed();
        bimod.finish(&mut report);
        if !bimodule_ok {
            return report;
        }

        let mut eps = AxiomCheck::new("counit is a bimodule map");
        for i in 0..n {
            for t in 0..m {
                let rt = e(t);
                let lhs = self.counit_of(self.left[t].column(i));
                eps.require(lhs == r.mul(&rt, &self.counit[i]), || format!("ε({}·{}) ≠ {}·ε({})", r.label(t), self.label(i), r.label(t), self.label(i)));
                let lhs = self.counit_of(self.right[t].column(i));
                eps.require(lhs == r.mul(&self.counit[i], &rt), || format!("ε({}·{}) ≠ ε({})·{}", self.label(i), r.label(t), self.label(i), r.label(t)));
            }
        }
        eps.finish(&mut report);

        let sq = self.square();
        let mut delta = AxiomCheck::new("comultiplication is a bimodule map");
        for i in 0..n {
            let d = &self.comult[i];
            for t in 0..m {
                let lhs = sq.project(&self.comult_of(self.left[t].column(i)));
                let rhs = sq.project(&tensor_map(d, n, Some(&self.left[t]), None, &f));
                delta.require(lhs == rhs, || format!("Δ({}·{}) ≠ {}·Δ({})", r.label(t), self.label(i), r.label(t), self.label(i)));
                let lhs = sq.project(&self.comult_of(self.right[t].column(i)));
                let rhs = sq.project(&tensor_map(d, n, None, Some(&self.right[t]), &f));
                delta.require(lhs == rhs, || format!("Δ({}·{}) ≠ Δ({})·{}", self.label(i), r.label(t), self.label(i), r.label(t)));
            }
        }
        delta.finish(&mut report);

        let cube = RelTensor::new(&f, &sq.module, &self.bimodule());
        let mut coassoc = AxiomCheck::new("coassociativity");
        for i in 0..n {
            let (lhs, rhs) = self.coassociativity_sides(i, &sq, &cube);
            coassoc.require(lhs == rhs, || format!("(Δ⊗id)Δ({0}) ≠ (id⊗Δ)Δ({0})", self.label(i)));
        }
        coassoc.finish(&mut report);

        let mut left_counit = AxiomCheck::new("left counit law");
        let mut right_counit = AxiomCheck::new("right counit law");
        for i in 0..n {
            let mut l = Accumulator::new();
            let mut rr = Accumulator::new();
            for (idx, c) in self.comult[i].iter() {
                let (x, y) = (idx / n, idx % n);
                l.add_scaled(c, &act(&self.left, &self.counit[x], &e(y), &f), &f);
                rr.add_scaled(c, &act(&self.right, &self.counit[y], &e(x), &f), &f);
            }
            left_counit.require(l.finish(&f) == e(i), || format!("(ε⊗id)Δ({0}) ≠ {0}", self.label(i)));
            right_counit.require(rr.finish(&f) == e(i), || format!("(id⊗ε)Δ({0}) ≠ {0}", self.label(i)));
        }
        left_counit.finish(&mut report);
        right_counit.finish(&mut report);
        report
    }

    /// Both sides of coassociativity for `c_i` in `C ⊗_R C ⊗_R C`.
    pub fn coassociativity_sides(&self, i: usize, sq: &RelTensor, cube: &RelTensor) -> (SparseVec, SparseVec) {
        let f = self.field();
        let n = self.dim();
        let mut lhs = Accumulator::new();
        let mut rhs = Accumulator::new();
        for (idx, c) in self.comult[i].iter() {
            let (x, y) = (idx / n, idx % n);
            let left_part = sq.project(&self.comult[x]);
            lhs.add_scaled(c, &cube.project_pair(&left_part, &SparseVec::unit(y, f)), f);
            for (idx2, c2) in self.comult[y].iter() {
                let (u, v) = (idx2 / n, idx2 % n);
                let xu = sq.project_pair(&SparseVec::unit(x, f), &SparseVec::unit(u, f));
                rhs.add_scaled(&f.mul(c, c2), &cube.project_pair(&xu, &SparseVec::unit(v, f)), f);
            }
        }
        (lhs.finish(f), rhs.finish(f))
    }
}

/// `(a ⊗ b)` applied to a vector of `C ⊗_k C` (index `j * n + k`); `None`
/// is the identity.
pub fn tensor_map(v: &SparseVec, n: usize, a: Option<&SparseMatrix>, b: Option<&SparseMatrix>, f: &Field) -> SparseVec {
    let mut acc = Accumulator::new();
    for (idx, c) in v.iter() {
        let (x, y) = (idx / n, idx % n);
        let ax = a.map_or_else(|| SparseVec::unit(x, f), |m| m.column(x).clone());
        let by = b.map_or_else(|| SparseVec::unit(y, f), |m| m.column(y).clone());
        acc.add_scaled(c, &ax.tensor(&by, n, f), f);
    }
    acc.finish(f)
}

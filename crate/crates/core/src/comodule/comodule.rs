use crate::coring::{AxiomCheck, Bialgebra, BasisElement, Bimodule, Coring, RelTensor, Report};
use crate::error::{Error, Result};
use crate::linalg::{Accumulator, Field, SparseMatrix, SparseVec};

use crate::coring::tensor::act;

/// A right comodule `ρ: M → M ⊗_R C` over a coring `C` over `R`.
///
/// `action[t]` is the right action of the `t`-th basis element of `R` on
/// `M`; `coaction[i]` lifts `ρ(m_i)` to `M ⊗_k C` (index `j * dim C + k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    pub coring: Coring,
    pub basis: Vec<BasisElement>,
    pub action: Vec<SparseMatrix>,
    pub coaction: Vec<SparseVec>,
}

impl Comodule {
    pub fn field(&self) -> &Field {
        self.coring.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    /// The coring over itself via `Δ`.
    pub fn regular(c: &Coring) -> Comodule {
        Comodule { coring: c.clone(), basis: c.basis.clone(), action: c.right.clone(), coaction: c.comult.clone() }
    }

    /// The ground field with `ρ(1) = 1 ⊗ 1` over a bialgebra.
    pub fn unit(b: &Bialgebra) -> Comodule {
        let f = &b.field;
        Comodule {
            coring: b.coring(),
            basis: vec![BasisElement::plain("1")],
            action: vec![SparseMatrix::identity(f, 1)],
            coaction: vec![b.unit.clone()],
        }
    }

    /// A comodule over a coalgebra (a coring over the ground field).
    pub fn over_field(c: &Coring, basis: Vec<BasisElement>, coaction: Vec<SparseVec>) -> Comodule {
        let id = SparseMatrix::identity(c.field(), basis.len());
        Comodule { coring: c.clone(), basis, action: vec![id], coaction }
    }

    pub fn module(&self) -> Bimodule {
        Bimodule { dim: self.dim(), left: vec![], right: self.action.clone() }
    }

    /// `M ⊗_R C`.
    pub fn target(&self) -> RelTensor {
        RelTensor::new(self.field(), &self.module(), &self.coring.bimodule())
    }

    /// `ρ(v)` as a lift in `M ⊗_k C`.
    pub fn coact(&self, v: &SparseVec) -> SparseVec {
        let f = self.field();
        let mut acc = Accumulator::new();
        for (i, c) in v.iter() {
            acc.add_scaled(c, &self.coaction[*i], f);
        }
        acc.finish(f)
    }

    /// Exact check of the module, linearity, counit and coassociativity
    /// axioms on basis elements.
    pub fn check(&self) -> Report {
        let mut report = Report::new();
        let f = self.field().clone();
        let c = &self.coring;
        let r = &c.base;
        let (n, nc, m) = (self.dim(), c.dim(), r.dim());
        let e = |i: usize| SparseVec::unit(i, &f);

        let mut module = AxiomCheck::new("module");
        if self.action.len() != m {
            module.require(false, || format!("{m} action matrices expected"));
        } else {
            for i in 0..n {
                let x = e(i);
                module.require(act(&self.action, &r.unit, &x, &f) == x, || format!("{}·1 ≠ {}", self.label(i), self.label(i)));
                for s in 0..m {
                    for t in 0..m {
                        if !r.in_range(r.degree(s) + r.degree(t)) {
                            continue;
                        }
                        let lhs = self.action[t].apply(&self.action[s].apply(&x));
                        module.require(lhs == act(&self.action, r.mul_basis(s, t), &x, &f), || {
                            format!("({}·{})·{} ≠ {}·({}{})", self.label(i), r.label(s), r.label(t), self.label(i), r.label(s), r.label(t))
                        });
                    }
                }
            }
        }
        let ok = !module.failed();
        module.finish(&mut report);
        if !ok {
            return report;
        }

        let t = self.target();
        let mut linear = AxiomCheck::new("coaction is a module map");
        for i in 0..n {
            for s in 0..m {
                let lhs = t.project(&self.coact(self.action[s].column(i)));
                let mut rhs = Accumulator::new();
                for (idx, v) in self.coaction[i].iter() {
                    let (j, k) = (idx / nc, idx % nc);
                    rhs.add_scaled(v, &e(j).tensor(c.right[s].column(k), nc, &f), &f);
                }
                let rhs = t.project(&rhs.finish(&f));
                linear.require(lhs == rhs, || format!("ρ({}·{}) ≠ ρ({})·{}", self.label(i), r.label(s), self.label(i), r.label(s)));
            }
        }
        linear.finish(&mut report);

        let mut counit = AxiomCheck::new("counit law");
        for i in 0..n {
            let mut acc = Accumulator::new();
            for (idx, v) in self.coaction[i].iter() {
                let (j, k) = (idx / nc, idx % nc);
                acc.add_scaled(v, &act(&self.action, &c.counit[k], &e(j), &f), &f);
            }
            counit.require(acc.finish(&f) == e(i), || format!("(id⊗ε)ρ({0}) ≠ {0}", self.label(i)));
        }
        counit.finish(&mut report);

        let cube = RelTensor::new(&f, &t.module, &c.bimodule());
        let mut coassoc = AxiomCheck::new("coassociativity");
        for i in 0..n {
            let mut lhs = Accumulator::new();
            let mut rhs = Accumulator::new();
            for (idx, v) in self.coaction[i].iter() {
                let (j, k) = (idx / nc, idx % nc);
                lhs.add_scaled(v, &cube.project_pair(&t.project(&self.coaction[j]), &e(k)), &f);
                for (idx2, v2) in c.comult[k].iter() {
                    let (u, w) = (idx2 / nc, idx2 % nc);
                    rhs.add_scaled(&f.mul(v, v2), &cube.project_pair(&t.project_pair(&e(j), &e(u)), &e(w)), &f);
                }
            }
            coassoc.require(lhs.finish(&f) == rhs.finish(&f), || format!("(ρ⊗id)ρ({0}) ≠ (id⊗Δ)ρ({0})", self.label(i)));
        }
        coassoc.finish(&mut report);

        let bd = |b: &BasisElement| (b.degree, b.weight);
        let mut graded = AxiomCheck::new("coaction preserves the grading");
        for i in 0..n {
            for (idx, _) in self.coaction[i].iter() {
                let (j, k) = (idx / nc, idx % nc);
                let (a, b) = (bd(&self.basis[j]), bd(&c.basis[k]));
                graded.require(bd(&self.basis[i]) == (a.0 + b.0, a.1 + b.1), || format!("ρ({}) ∋ {}⊗{}", self.label(i), self.label(j), c.label(k)));
            }
        }
        graded.finish(&mut report);
        report
    }

    /// Whether `g: M → N` commutes with the actions and coactions.
    pub fn is_morphism(&self, other: &Comodule, g: &SparseMatrix) -> bool {
        let eqs = morphism_equations(self, other);
        let f = self.field();
        let x = SparseVec::from_entries(
            (0..other.dim()).flat_map(|a| (0..self.dim()).map(move |b| (a, b))).map(|(a, b)| (a * self.dim() + b, g.column(b).get(a, f))).collect(),
            f,
        );
        eqs.apply(&x).is_zero()
    }

    /// Basis of the space of comodule morphisms `M → N`, each as a
    /// `dim N × dim M` matrix.
    pub fn morphisms(&self, other: &Comodule) -> Result<Vec<SparseMatrix>> {
        if !same_coring(&self.coring, &other.coring) {
            return Err(Error::BaseMismatch);
        }
        let f = self.field();
        let (dm, dn) = (self.dim(), other.dim());
        Ok(morphism_equations(self, other)
            .kernel()
            .into_iter()
            .map(|x| {
                let cols = (0..dm)
                    .map(|b| SparseVec::from_entries((0..dn).map(|a| (a, x.get(a * dm + b, f))).collect(), f))
                    .collect();
                SparseMatrix::from_columns(f, dn, cols)
            })
            .collect())
    }
}

/// Linear conditions on `g` (unknown `g_{ab}` at index `a * dim M + b`):
/// `(g⊗id)ρ_M = ρ_N g` in `N ⊗_R C` and `g(m·r) = g(m)·r`.
fn morphism_equations(m: &Comodule, n: &Comodule) -> SparseMatrix {
    let f = m.field();
    let c = &m.coring;
    let (dm, dn, nc) = (m.dim(), n.dim(), c.dim());
    let t = n.target();
    let rows_per = t.dim() + dn * m.action.len();
    let mut cols = Vec::with_capacity(dn * dm);
    for a in 0..dn {
        for b in 0..dm {
            let mut entries = Accumulator::new();
            for i in 0..dm {
                let off = i * rows_per;
                let mut lhs = Accumulator::new();
                for (idx, v) in m.coaction[i].iter() {
                    if idx / nc == b {
                        lhs.add_term(a * nc + idx % nc, v, f);
                    }
                }
                let mut diff = lhs.finish(f);
                if i == b {
                    diff = diff.sub(&n.coaction[a], f);
                }
                for (q, v) in t.project(&diff).iter() {
                    entries.add_term(off + q, v, f);
                }
                for (s, (am, an)) in m.action.iter().zip(&n.action).enumerate() {
                    let base = off + t.dim() + s * dn;
                    let mut d = Accumulator::new();
                    // g(m_i · r_s) − g(m_i) · r_s, coefficient of g_{ab}
                    let coeff = am.column(i).get(b, f);
                    if !f.is_zero(&coeff) {
                        d.add_term(a, &coeff, f);
                    }
                    if i == b {
                        d.add_scaled(&f.neg(&f.one()), an.column(a), f);
                    }
                    for (q, v) in d.finish(f).iter() {
                        entries.add_term(base + q, v, f);
                    }
                }
            }
            cols.push(entries.finish(f));
        }
    }
    SparseMatrix::from_columns(f, dm * rows_per, cols)
}

/// Two corings agree as structures (labels aside).
pub fn same_coring(a: &Coring, b: &Coring) -> bool {
    a.base.field == b.base.field
        && a.base.mult == b.base.mult
        && a.left == b.left
        && a.right == b.right
        && a.comult == b.comult
        && a.counit == b.counit
}

/// `M ⊗ N` over a bialgebra: `ρ(m⊗n) = Σ ±(m₀⊗n₀) ⊗ m₁n₁`, the sign being
/// `(−1)^{|m₁||n₀|}`. Basis `m_i⊗n_j` at index `i * dim N + j`.
pub fn comodule_tensor(m1: &Comodule, m2: &Comodule, b: &Bialgebra) -> Result<Comodule> {
    let c = b.coring();
    if !same_coring(&m1.coring, &c) || !same_coring(&m2.coring, &c) {
        return Err(Error::BaseMismatch);
    }
    let f = &b.field;
    let (d1, d2, nc) = (m1.dim(), m2.dim(), b.dim());
    let mut basis = Vec::with_capacity(d1 * d2);
    let mut coaction = Vec::with_capacity(d1 * d2);
    for i in 0..d1 {
        for j in 0..d2 {
            let (x, y) = (&m1.basis[i], &m2.basis[j]);
            basis.push(BasisElement::new(
                format!("{}⊗{}", x.label, y.label),
                x.degree + y.degree,
                x.weight + y.weight,
                (x.parity + y.parity) % 2,
            ));
            let mut acc = Accumulator::new();
            for (ia, va) in m1.coaction[i].iter() {
                let (u, p) = (ia / nc, ia % nc);
                for (ib, vb) in m2.coaction[j].iter() {
                    let (w, q) = (ib / nc, ib % nc);
                    let mut coeff = f.mul(va, vb);
                    if b.parity(p) * m2.basis[w].parity % 2 == 1 {
                        coeff = f.neg(&coeff);
                    }
                    let row = u * d2 + w;
                    for (k, v) in b.mul_basis(p, q).iter() {
                        acc.add_term(row * nc + k, &f.mul(&coeff, v), f);
                    }
                }
            }
            coaction.push(acc.finish(f));
        }
    }
    Ok(Comodule::over_field(&c, basis, coaction))
}

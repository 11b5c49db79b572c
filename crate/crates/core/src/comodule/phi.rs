//! Comodules over a finite-dimensional coalgebra `C` as modules over the
//! dual algebra `A = C*`: `a · m = Σ a(m₁) m₀` for `ρ(m) = Σ m₀ ⊗ m₁`.

use crate::coring::{AxiomCheck, Bialgebra, BasisElement, Report};
use crate::error::{Error, Result};
use crate::linalg::{Field, SparseMatrix, SparseVec};

use super::comodule::{same_coring, Comodule};

/// A module over the dual algebra; `action[x]` is the action of the `x`-th
/// basis element of `algebra`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualModule {
    pub algebra: Bialgebra,
    pub basis: Vec<BasisElement>,
    pub action: Vec<SparseMatrix>,
}

impl DualModule {
    pub fn field(&self) -> &Field {
        &self.algebra.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `a · v`.
    pub fn act(&self, a: &SparseVec, v: &SparseVec) -> SparseVec {
        let f = self.field();
        let mut out = SparseVec::new();
        for (x, c) in a.iter() {
            out = out.add_scaled(c, &self.action[*x].apply(v), f);
        }
        out
    }

    /// Unitality and associativity of the action on basis elements.
    pub fn check(&self) -> Report {
        let mut report = Report::new();
        let f = self.field().clone();
        let a = &self.algebra;
        let n = a.dim();
        let mut unital = AxiomCheck::new("unital action");
        let mut assoc = AxiomCheck::new("associative action");
        for i in 0..self.dim() {
            let v = SparseVec::unit(i, &f);
            unital.require(self.act(&a.unit, &v) == v, || format!("1·{0} ≠ {0}", self.basis[i].label));
            for x in 0..n {
                for y in 0..n {
                    let lhs = self.action[x].apply(&self.action[y].apply(&v));
                    let rhs = self.act(a.mul_basis(x, y), &v);
                    assoc.require(lhs == rhs, || format!("{}·({}·{}) ≠ ({}{})·{}", a.label(x), a.label(y), self.basis[i].label, a.label(x), a.label(y), self.basis[i].label));
                }
            }
        }
        unital.finish(&mut report);
        assoc.finish(&mut report);
        let bd = |b: &BasisElement| (b.degree, b.weight);
        let mut graded = AxiomCheck::new("action lowers degrees by the degree of the acting element");
        for (x, g) in self.action.iter().enumerate() {
            let (dx, wx) = bd(&a.basis[x]);
            for (i, col) in g.columns().iter().enumerate() {
                let (di, wi) = bd(&self.basis[i]);
                for (j, _) in col.iter() {
                    graded.require(bd(&self.basis[*j]) == (di - dx, wi - wx), || format!("{}·{} ∋ {}", a.label(x), self.basis[i].label, self.basis[*j].label));
                }
            }
        }
        graded.finish(&mut report);
        report
    }
}

/// `Φ(M)`: the same space with the action of `C*`. `b` is the bialgebra
/// whose coalgebra `m` lives over.
pub fn phi_dualize(m: &Comodule, b: &Bialgebra) -> Result<DualModule> {
    if !same_coring(&m.coring, &b.coring()) {
        return Err(Error::BaseMismatch);
    }
    let algebra = b.dual()?;
    let f = &b.field;
    let (n, nc) = (m.dim(), b.dim());
    let mut cols = vec![vec![Vec::new(); n]; nc];
    for (l, rho) in m.coaction.iter().enumerate() {
        for (idx, c) in rho.iter() {
            cols[idx % nc][l].push((idx / nc, c.clone()));
        }
    }
    let action = cols
        .into_iter()
        .map(|cs| SparseMatrix::from_columns(f, n, cs.into_iter().map(|e| SparseVec::from_entries(e, f)).collect()))
        .collect();
    Ok(DualModule { algebra, basis: m.basis.clone(), action })
}

/// Inverse of [`phi_dualize`]: the coaction of `A*` read off the action.
pub fn phi_inverse(d: &DualModule) -> Result<Comodule> {
    let coalgebra = d.algebra.dual()?;
    let f = &coalgebra.field;
    let (n, nc) = (d.dim(), coalgebra.dim());
    let mut coaction = vec![Vec::new(); n];
    for (x, a) in d.action.iter().enumerate() {
        for (l, col) in a.columns().iter().enumerate() {
            for (j, c) in col.iter() {
                coaction[l].push((j * nc + x, c.clone()));
            }
        }
    }
    let coaction = coaction.into_iter().map(|e| SparseVec::from_entries(e, f)).collect();
    Ok(Comodule::over_field(&coalgebra.coring(), d.basis.clone(), coaction))
}

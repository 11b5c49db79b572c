//! Tensor products over a base algebra `R`, realized as quotients of tensor
//! products over the ground field.

use crate::algebra::GradedAlgebra;
use crate::linalg::{Accumulator, Echelon, Field, SparseMatrix, SparseVec};

/// A finite-dimensional space with actions of the base basis elements. An
/// empty action list means the side carries no action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub dim: usize,
    pub left: Vec<SparseMatrix>,
    pub right: Vec<SparseMatrix>,
}

impl Bimodule {
    /// `r · x` for `r` a base element given in coordinates.
    pub fn act_left(&self, r: &SparseVec, x: &SparseVec, f: &Field) -> SparseVec {
        act(&self.left, r, x, f)
    }

    pub fn act_right(&self, x: &SparseVec, r: &SparseVec, f: &Field) -> SparseVec {
        act(&self.right, r, x, f)
    }

    /// The base algebra itself acting on both sides.
    pub fn regular(base: &GradedAlgebra) -> Bimodule {
        let f = &base.field;
        let left = (0..base.dim()).map(|t| base.left_mult(&SparseVec::unit(t, f))).collect();
        let right = (0..base.dim()).map(|t| base.right_mult(&SparseVec::unit(t, f))).collect();
        Bimodule { dim: base.dim(), left, right }
    }
}

pub fn act(mats: &[SparseMatrix], r: &SparseVec, x: &SparseVec, f: &Field) -> SparseVec {
    let mut acc = Accumulator::new();
    for (t, c) in r.iter() {
        acc.add_scaled(c, &mats[*t].apply(x), f);
    }
    acc.finish(f)
}

/// `A ⊗_R B` as the quotient of `A ⊗_k B` (index `i * dim B + j`) by the
/// span of `a·r ⊗ b − a ⊗ r·b`. The basis is the set of non-pivot pairs of
/// the reduced relation space.
#[derive(Clone, Debug)]
pub struct RelTensor {
    field: Field,
    b_dim: usize,
    relations: Echelon,
    index: Vec<Option<usize>>,
    basis: Vec<usize>,
    /// Left action induced from `A`, right action induced from `B`.
    pub module: Bimodule,
}

impl RelTensor {
    pub fn new(field: &Field, a: &Bimodule, b: &Bimodule) -> RelTensor {
        let (ad, bd) = (a.dim, b.dim);
        let mut relations = Echelon::new(field, ad * bd);
        if a.right.len() > 1 || b.left.len() > 1 {
            for (ra, lb) in a.right.iter().zip(&b.left) {
                for i in 0..ad {
                    let ar = ra.column(i);
                    for j in 0..bd {
                        let lhs = ar.tensor(&SparseVec::unit(j, field), bd, field);
                        let rhs = SparseVec::unit(i, field).tensor(lb.column(j), bd, field);
                        let v = lhs.sub(&rhs, field);
                        if !v.is_zero() {
                            relations.insert(&v);
                        }
                    }
                }
            }
        }
        let basis = relations.free_columns();
        let mut index = vec![None; ad * bd];
        for (q, &c) in basis.iter().enumerate() {
            index[c] = Some(q);
        }
        let mut t = RelTensor {
            field: field.clone(),
            b_dim: bd,
            relations,
            index,
            basis,
            module: Bimodule { dim: 0, left: vec![], right: vec![] },
        };
        let n = t.basis.len();
        let left = a
            .left
            .iter()
            .map(|l| {
                let cols = t.basis.iter().map(|&c| t.project(&l.column(c / bd).tensor(&SparseVec::unit(c % bd, field), bd, field))).collect();
                SparseMatrix::from_columns(field, n, cols)
            })
            .collect();
        let right = b
            .right
            .iter()
            .map(|r| {
                let cols = t.basis.iter().map(|&c| t.project(&SparseVec::unit(c / bd, field).tensor(r.column(c % bd), bd, field))).collect();
                SparseMatrix::from_columns(field, n, cols)
            })
            .collect();
        t.module = Bimodule { dim: n, left, right };
        t
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The pair `(i, j)` representing quotient basis element `q`.
    pub fn representative(&self, q: usize) -> (usize, usize) {
        let c = self.basis[q];
        (c / self.b_dim, c % self.b_dim)
    }

    /// Class of a vector of `A ⊗_k B`.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let r = self.relations.reduce(v);
        r.reindex(&self.field, |c| self.index[c])
    }

    pub fn project_pair(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.project(&x.tensor(y, self.b_dim, &self.field))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GradedAlgebra;

    #[test]
    fn extension_over_itself_is_one_dimensional() {
        let l = Field::gaussian_rationals();
        let base = GradedAlgebra::from_extension(&l).unwrap();
        let reg = Bimodule::regular(&base);
        let t = RelTensor::new(&base.field, &reg, &reg);
        assert_eq!(t.dim(), 2);
        let q = &base.field;
        // i ⊗ i ≡ (i·i) ⊗ 1 = −1 ⊗ 1
        let ii = t.project_pair(&SparseVec::unit(1, q), &SparseVec::unit(1, q));
        let minus = t.project_pair(&SparseVec::unit(0, q).neg(q), &SparseVec::unit(0, q));
        assert_eq!(ii, minus);
    }
}

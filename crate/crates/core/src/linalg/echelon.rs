//! Reduced row echelon forms built incrementally.
//!
//! Pivots are always the lowest nonzero column of a reduced row, so the
//! stored basis of a subspace is its unique reduced echelon basis and does not
//! depend on insertion order.

use std::collections::BTreeMap;

use super::field::{Field, Scalar};
use super::vector::SparseVec;

/// A subspace of `k^n` in reduced echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    ambient: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(field: &Field, ambient: usize) -> Self {
        Echelon { field: field.clone(), ambient, rows: BTreeMap::new() }
    }

    pub fn from_vectors<'a>(field: &Field, ambient: usize, vs: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut e = Echelon::new(field, ambient);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.rows.contains_key(&c)
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec> {
        self.rows.get(&pivot)
    }

    /// Columns that are not pivots, in increasing order: a deterministic
    /// complement basis of unit vectors.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.rows.contains_key(c)).collect()
    }

    /// Coefficients `v[p]` for pivots `p`: `v ≡ Σ coef_p row_p` modulo the
    /// residual.
    fn pivot_coefficients(&self, v: &SparseVec) -> Vec<(usize, Scalar)> {
        v.iter().filter(|(i, _)| self.rows.contains_key(i)).cloned().collect()
    }

    /// Residual of `v` after clearing every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let f = &self.field;
        let mut r = v.clone();
        for (p, c) in self.pivot_coefficients(v) {
            r = r.add_scaled(&f.neg(&c), &self.rows[&p], f);
        }
        r
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns the new pivot if `v` was independent.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let f = self.field.clone();
        let r = self.reduce(v);
        let (p, lead) = r.leading()?.clone();
        let r = r.scale(&f.inv(&lead).expect("nonzero leading entry"), &f);
        for row in self.rows.values_mut() {
            let c = row.get(p, &f);
            if !f.is_zero(&c) {
                *row = row.add_scaled(&f.neg(&c), &r, &f);
            }
        }
        self.rows.insert(p, r);
        Some(p)
    }
}

/// Expresses vectors as combinations of a labelled list of generators.
///
/// Each generator is inserted in order; dependent generators are skipped.
/// Rows keep, alongside their echelon form, the combination of generator
/// labels that produced them.
#[derive(Clone, Debug)]
pub struct Solver {
    field: Field,
    rows: BTreeMap<usize, (SparseVec, SparseVec)>,
    accepted: Vec<usize>,
}

impl Solver {
    pub fn new(field: &Field) -> Self {
        Solver { field: field.clone(), rows: BTreeMap::new(), accepted: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Labels of the generators that were independent when inserted.
    pub fn accepted(&self) -> &[usize] {
        &self.accepted
    }

    fn reduce_tracked(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let f = &self.field;
        let mut r = v.clone();
        let mut combo = SparseVec::new();
        let coeffs: Vec<(usize, Scalar)> =
            v.iter().filter(|(i, _)| self.rows.contains_key(i)).cloned().collect();
        for (p, c) in coeffs {
            let (row, rc) = &self.rows[&p];
            let neg = f.neg(&c);
            r = r.add_scaled(&neg, row, f);
            combo = combo.add_scaled(&neg, rc, f);
        }
        (r, combo)
    }

    /// Inserts generator `v` with label `label`; true if independent.
    pub fn insert(&mut self, label: usize, v: &SparseVec) -> bool {
        let f = self.field.clone();
        let (r, combo) = self.reduce_tracked(v);
        // r = v - Σ c_p row_p, so r's combination is e_label + combo
        let combo = combo.add(&SparseVec::unit(label, &f), &f);
        let Some((p, lead)) = r.leading().cloned() else {
            return false;
        };
        let inv = f.inv(&lead).expect("nonzero");
        let r = r.scale(&inv, &f);
        let combo = combo.scale(&inv, &f);
        for (row, rc) in self.rows.values_mut() {
            let c = row.get(p, &f);
            if !f.is_zero(&c) {
                let neg = f.neg(&c);
                *row = row.add_scaled(&neg, &r, &f);
                *rc = rc.add_scaled(&neg, &combo, &f);
            }
        }
        self.rows.insert(p, (r, combo));
        self.accepted.push(label);
        true
    }

    /// `Some(coefficients over labels)` with `v = Σ c_l gen_l`, or `None` if
    /// `v` is not in the span.
    pub fn express(&self, v: &SparseVec) -> Option<SparseVec> {
        let (r, combo) = self.reduce_tracked(v);
        if r.is_zero() {
            Some(combo.neg(&self.field))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: &Field, xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>(), f)
    }

    #[test]
    fn echelon_is_insertion_order_independent() {
        let f = Field::rationals();
        let a = [v(&f, &[1, 2, 3]), v(&f, &[0, 1, 1]), v(&f, &[2, 5, 7])];
        let e1 = Echelon::from_vectors(&f, 3, a.iter());
        let e2 = Echelon::from_vectors(&f, 3, a.iter().rev());
        assert_eq!(e1.dim(), 2);
        assert_eq!(e1.rows().cloned().collect::<Vec<_>>(), e2.rows().cloned().collect::<Vec<_>>());
    }

    #[test]
    fn solver_expresses_combinations() {
        let f = Field::prime(5).unwrap();
        let mut s = Solver::new(&f);
        assert!(s.insert(10, &v(&f, &[1, 1, 0])));
        assert!(s.insert(11, &v(&f, &[0, 1, 1])));
        assert!(!s.insert(12, &v(&f, &[1, 2, 1])));
        let target = v(&f, &[2, 5, 3]);
        let c = s.express(&target).unwrap();
        assert_eq!(c.get(10, &f), f.from_i64(2));
        assert_eq!(c.get(11, &f), f.from_i64(3));
        assert!(s.express(&v(&f, &[1, 0, 0])).is_none());
    }
}

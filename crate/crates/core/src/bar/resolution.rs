//! Minimal free resolution of `k` over a connected graded algebra, built one
//! internal degree at a time. The generator count of `F_s` in degree `d` is
//! `dim Tor_{s,d}(k, k)`, which gives a bar-free check on Tor dimensions.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::GradedAlgebra;
use crate::error::Result;
use crate::linalg::{Accumulator, Echelon, SparseMatrix, SparseVec};

use super::complex::require_connected;
use super::tor::default_internal_bound;

/// `⊕_g A·g` truncated at internal degree `top`; basis `b·g`.
struct Free {
    basis: Vec<(usize, usize)>,
    degree: Vec<i64>,
    index: HashMap<(usize, usize), usize>,
}

impl Free {
    fn new(a: &GradedAlgebra, gens: &[i64], top: i64) -> Self {
        let mut basis = Vec::new();
        let mut degree = Vec::new();
        for (g, &dg) in gens.iter().enumerate() {
            for b in 0..a.dim() {
                let d = dg + a.degree(b);
                if d <= top {
                    basis.push((g, b));
                    degree.push(d);
                }
            }
        }
        let index = basis.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        Free { basis, degree, index }
    }

    fn len(&self) -> usize {
        self.basis.len()
    }

    /// `b · v` for a basis element `b` of `A`.
    fn act(&self, a: &GradedAlgebra, b: usize, v: &SparseVec) -> SparseVec {
        let f = &a.field;
        let mut acc = Accumulator::new();
        for (i, c) in v.iter() {
            let (g, x) = self.basis[*i];
            for (y, cy) in a.mul_basis(b, x).iter() {
                if let Some(&k) = self.index.get(&(g, *y)) {
                    acc.add_term(k, &f.mul(c, cy), f);
                }
            }
        }
        acc.finish(f)
    }
}

/// `dim Tor_{s,d}(k, k)` for `s ≤ n_max` up to the default internal-degree
/// bound of [`tor_bialgebra`](super::tor_bialgebra).
pub fn tor_dims_via_resolution(a: &GradedAlgebra, n_max: usize) -> Result<BTreeMap<(usize, i64), usize>> {
    tor_dims_via_resolution_bounded(a, n_max, default_internal_bound(a, n_max))
}

/// `dim Tor_{s,d}(k, k)` for `s ≤ n_max`, `d ≤ d_max` (capped at the realized
/// degree), zero entries omitted.
pub fn tor_dims_via_resolution_bounded(a: &GradedAlgebra, n_max: usize, d_max: i64) -> Result<BTreeMap<(usize, i64), usize>> {
    require_connected(a)?;
    let f = &a.field;
    let top = a.degree_bound.map_or(d_max, |b| d_max.min(b));
    let mut out = BTreeMap::from([((0, 0), 1)]);
    let mut cur = Free::new(a, &[0], top);
    // augmentation F_0 → k
    let unit = a.unit.leading().map(|(i, _)| *i).unwrap();
    let cols = (0..cur.len()).map(|i| if cur.basis[i].1 == unit { SparseVec::unit(0, f) } else { SparseVec::new() }).collect();
    let mut boundary = SparseMatrix::from_columns(f, 1, cols);
    for s in 0..n_max {
        let mut span = Echelon::new(f, cur.len());
        let mut gens: Vec<(i64, SparseVec)> = Vec::new();
        for d in 0..=top {
            let chosen = gens.len();
            for (dg, v) in &gens[..chosen] {
                for b in (0..a.dim()).filter(|&b| a.degree(b) == d - dg) {
                    span.insert(&cur.act(a, b, v));
                }
            }
            let cols: Vec<usize> = (0..cur.len()).filter(|&i| cur.degree[i] == d).collect();
            for k in boundary.select_columns(&cols).kernel() {
                let v = k.reindex(f, |j| Some(cols[j]));
                if span.insert(&v).is_some() {
                    gens.push((d, v));
                }
            }
        }
        for (d, _) in &gens {
            *out.entry((s + 1, *d)).or_insert(0) += 1;
        }
        let degrees: Vec<i64> = gens.iter().map(|(d, _)| *d).collect();
        let next = Free::new(a, &degrees, top);
        let cols = next.basis.iter().map(|&(g, b)| cur.act(a, b, &gens[g].1)).collect();
        boundary = SparseMatrix::from_columns(f, cur.len(), cols);
        cur = next;
    }
    Ok(out)
}

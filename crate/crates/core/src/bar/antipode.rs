//! Antipodes of bialgebras: the recursion for connected filtered bialgebras
//! and, for anything else, the convolution inverse of the identity found by
//! a linear solve.

use crate::coring::Bialgebra;
use crate::error::{Error, Result};
use crate::linalg::{Accumulator, SparseMatrix, SparseVec};

/// Antipode of a bialgebra connected with respect to the weight filtration:
/// the unit is a basis vector of weight 0, every other basis vector has
/// positive weight, and `Δ(x) − x⊗1` only involves left factors of smaller
/// weight. Computed by `S(x) = ε(x)1 − Σ S(x′)x″` over the other terms.
pub fn antipode(b: &Bialgebra) -> Result<SparseMatrix> {
    let f = &b.field;
    let n = b.dim();
    let Some((u, one)) = b.unit.leading().cloned().filter(|_| b.unit.nnz() == 1) else {
        return Err(Error::NotConnected("unit is not a basis vector".into()));
    };
    if !f.is_one(&one) || b.basis[u].weight != 0 {
        return Err(Error::NotConnected("unit must be a weight-0 basis vector".into()));
    }
    if let Some(i) = (0..n).find(|&i| i != u && b.basis[i].weight <= 0) {
        return Err(Error::NotConnected(format!("{} has non-positive weight", b.label(i))));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (b.basis[i].weight, i));
    let mut s: Vec<Option<SparseVec>> = vec![None; n];
    for &i in &order {
        let mut acc = Accumulator::new();
        acc.add_scaled(&b.counit.get(i, f), &b.unit, f);
        let mut lead = None;
        for (idx, c) in b.comult[i].iter() {
            let (x, y) = (idx / n, idx % n);
            if x == i && y == u {
                lead = Some(c.clone());
                continue;
            }
            let Some(sx) = &s[x] else {
                return Err(Error::NotConnected(format!("Δ({}) involves {} before its antipode is known", b.label(i), b.label(x))));
            };
            acc.add_scaled(&f.neg(c), &b.mul(sx, &SparseVec::unit(y, f)), f);
        }
        let lead = lead.ok_or_else(|| Error::NotConnected(format!("Δ({0}) has no {0}⊗1 term", b.label(i))))?;
        let inv = f.inv(&lead)?;
        s[i] = Some(acc.finish(f).scale(&inv, f));
    }
    Ok(SparseMatrix::from_columns(f, n, s.into_iter().map(Option::unwrap).collect()))
}

/// Solves `∇(S⊗id)Δ = ηε` for a linear `S`; returns `None` when the
/// identity has no convolution inverse. The solution is then also the
/// two-sided inverse.
pub fn antipode_by_solve(b: &Bialgebra) -> Option<SparseMatrix> {
    let f = &b.field;
    let n = b.dim();
    // unknown S_{ab} at index a * n + b: S(e_b) = Σ_a S_{ab} e_a
    // equation for each (basis i, output coordinate o)
    let mut cols: Vec<Accumulator> = (0..n * n).map(|_| Accumulator::new()).collect();
    for i in 0..n {
        for (idx, c) in b.comult[i].iter() {
            let (x, y) = (idx / n, idx % n);
            for a in 0..n {
                let prod = b.mul_basis(a, y);
                for (o, p) in prod.iter() {
                    cols[a * n + x].add_term(i * n + o, &f.mul(c, p), f);
                }
            }
        }
    }
    let matrix = SparseMatrix::from_columns(f, n * n, cols.into_iter().map(|a| a.finish(f)).collect());
    let mut rhs = Accumulator::new();
    for i in 0..n {
        let e = b.counit.get(i, f);
        for (o, u) in b.unit.iter() {
            rhs.add_term(i * n + o, &f.mul(&e, u), f);
        }
    }
    let sol = matrix.solve(&rhs.finish(f))?;
    let cols = (0..n)
        .map(|col| SparseVec::from_entries((0..n).map(|a| (a, sol.get(a * n + col, f))).collect(), f))
        .collect();
    Some(SparseMatrix::from_columns(f, n, cols))
}

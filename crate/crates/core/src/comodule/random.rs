//! Seeded random comodules over a bialgebra: direct sums of shifted unit and
//! regular comodules, conjugated by a random basis change that preserves the
//! grading metadata.

use std::collections::BTreeMap;

use rand::Rng;

use crate::coring::{Bialgebra, BasisElement};
use crate::linalg::{Field, Scalar, SparseMatrix, SparseVec};

use super::comodule::Comodule;

/// A random comodule of dimension at most `max_dim` (at least 1 when
/// `max_dim ≥ 1`).
pub fn random_comodule<R: Rng + ?Sized>(b: &Bialgebra, max_dim: usize, rng: &mut R) -> Comodule {
    let f = &b.field;
    let nc = b.dim();
    let mut basis: Vec<BasisElement> = Vec::new();
    let mut coaction: Vec<Vec<(usize, usize, Scalar)>> = Vec::new();
    let mut block = 0;
    while basis.len() < max_dim {
        let room = max_dim - basis.len();
        let regular = nc <= room && rng.gen_bool(0.5);
        if !regular && !basis.is_empty() && rng.gen_bool(0.3) {
            break;
        }
        let off = basis.len();
        let shift: i64 = rng.gen_range(0..3);
        block += 1;
        if regular {
            for (i, e) in b.basis.iter().enumerate() {
                basis.push(BasisElement::new(format!("{}[{block}]", e.label), e.degree + shift, e.weight, e.parity));
                coaction.push(b.comult[i].iter().map(|(idx, c)| (off + idx / nc, idx % nc, c.clone())).collect());
            }
        } else {
            basis.push(BasisElement::new(format!("1[{block}]"), shift, 0, 0));
            coaction.push(b.unit.iter().map(|(k, c)| (off, *k, c.clone())).collect());
        }
    }
    let n = basis.len();
    let rho: Vec<SparseVec> = coaction
        .into_iter()
        .map(|terms| SparseVec::from_entries(terms.into_iter().map(|(j, k, c)| (j * nc + k, c)).collect(), f))
        .collect();
    let g = graded_invertible(f, &basis, rng);
    let gi = g.inverse().expect("invertible by construction");
    // ρ' = (g⊗id) ρ g⁻¹
    let conj = (0..n)
        .map(|i| {
            let mut out = SparseVec::new();
            for (l, c) in gi.column(i).iter() {
                for (idx, v) in rho[*l].iter() {
                    let (j, k) = (idx / nc, idx % nc);
                    let moved = g.column(j).tensor(&SparseVec::unit(k, f), nc, f);
                    out = out.add_scaled(&f.mul(c, v), &moved, f);
                }
            }
            out
        })
        .collect();
    let mut basis = basis;
    for (i, e) in basis.iter_mut().enumerate() {
        e.label = format!("m{}", i + 1);
    }
    Comodule::over_field(&b.coring(), basis, conj)
}

/// Random invertible matrix that only mixes basis elements with equal
/// `(degree, weight, parity)`.
fn graded_invertible<R: Rng + ?Sized>(f: &Field, basis: &[BasisElement], rng: &mut R) -> SparseMatrix {
    let n = basis.len();
    let mut groups: BTreeMap<(i64, i64, u8), Vec<usize>> = BTreeMap::new();
    for (i, e) in basis.iter().enumerate() {
        groups.entry((e.degree, e.weight, e.parity)).or_default().push(i);
    }
    let mut cols = vec![SparseVec::new(); n];
    for idx in groups.values() {
        let k = idx.len();
        loop {
            let block: Vec<SparseVec> = (0..k).map(|_| SparseVec::from_entries((0..k).map(|r| (r, f.random(rng))).collect(), f)).collect();
            if SparseMatrix::from_columns(f, k, block.clone()).rank() == k {
                for (c, v) in block.iter().enumerate() {
                    cols[idx[c]] = v.reindex(f, |r| Some(idx[r]));
                }
                break;
            }
        }
    }
    SparseMatrix::from_columns(f, n, cols)
}

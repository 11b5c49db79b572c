//! Group algebras of elementary abelian `p`-groups, `kE ≅ k[x_1..x_r]/(x_i^p)`,
//! with the Hopf structure in which the `x_i` are primitive.

use crate::error::Result;
use crate::linalg::{Field, SparseMatrix, SparseVec};

use super::graded::GradedAlgebra;
use super::presentation::MonomialPresentation;

/// Comultiplication, counit and antipode on a realized `kE`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHopf {
    /// `comult[i]` lives in `kE ⊗ kE` with index `j * n + k`.
    pub comult: Vec<SparseVec>,
    pub counit: SparseVec,
    pub antipode: SparseMatrix,
    /// Exponent vector of each basis monomial.
    pub exponents: Vec<Vec<u32>>,
}

/// `k[x_1..x_r]/(x_1^p..x_r^p)` over `GF(p)`, generators in degree 1 when
/// `graded`, in degree 0 otherwise.
pub fn elementary_abelian_algebra(p: u64, r: usize, graded: bool) -> Result<GradedAlgebra> {
    let field = Field::prime(p)?;
    let deg = if graded { 1 } else { 0 };
    let vars = (1..=r).map(|i| (format!("x{i}"), deg)).collect();
    let relations = (0..r)
        .map(|i| {
            let mut e = vec![0u32; r];
            e[i] = p as u32;
            e
        })
        .collect();
    let pres = MonomialPresentation { field, vars, relations };
    pres.realize((p as i64 - 1) * r as i64)
}

/// The group algebra `kE` of rank `r` together with its primitive Hopf
/// structure: `Δ(x_i) = x_i⊗1 + 1⊗x_i`, `S(x_i) = −x_i`.
pub fn elementary_abelian_hopf(p: u64, r: usize, graded: bool) -> Result<(GradedAlgebra, GroupHopf)> {
    let a = elementary_abelian_algebra(p, r, graded)?;
    let f = a.field.clone();
    let n = a.dim();
    let words = a.words.as_ref().expect("monomial algebras carry words");
    let exponents: Vec<Vec<u32>> = words
        .iter()
        .map(|w| {
            let mut e = vec![0u32; r];
            for &g in w {
                e[g] += 1;
            }
            e
        })
        .collect();
    let index = |e: &[u32]| exponents.iter().position(|x| x == e);
    let mut comult = Vec::with_capacity(n);
    for e in &exponents {
        let mut terms = Vec::new();
        for b in sub_exponents(e) {
            let c: u64 = e.iter().zip(&b).map(|(&a, &b)| binomial(a as u64, b as u64) % p).product::<u64>() % p;
            if c == 0 {
                continue;
            }
            let rest: Vec<u32> = e.iter().zip(&b).map(|(a, b)| a - b).collect();
            let (i, j) = (index(&b).unwrap(), index(&rest).unwrap());
            terms.push((i * n + j, f.from_i64(c as i64)));
        }
        comult.push(SparseVec::from_entries(terms, &f));
    }
    let antipode = SparseMatrix::from_columns(
        &f,
        n,
        exponents
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let sign = if e.iter().sum::<u32>() % 2 == 0 { 1 } else { -1 };
                SparseVec::single(i, f.from_i64(sign), &f)
            })
            .collect(),
    );
    let counit = a.augmentation.clone().unwrap();
    Ok((a, GroupHopf { comult, counit, antipode, exponents }))
}

fn sub_exponents(e: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &x in e {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..=x).map(move |b| {
                    let mut v = prefix.clone();
                    v.push(b);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

//! The normalized bar complex `B(k, A, k)` of a connected augmented graded
//! algebra, sliced by homological degree `s` (word length) and internal
//! degree `d` (sum of letter degrees).
//!
//! `d[a₁|…|a_s] = Σ_{i=1}^{s-1} (−1)^i [a₁|…|a_i a_{i+1}|…|a_s]`. Letters are
//! odd for signs; the internal degree only grades.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Accumulator, Field, SparseMatrix, SparseVec};

/// Words of one bidegree.
#[derive(Clone, Debug, Default)]
pub struct Slice {
    pub words: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl Slice {
    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn position(&self, w: &[usize]) -> Option<usize> {
        self.index.get(w).copied()
    }
}

#[derive(Clone, Debug)]
pub struct BarComplex {
    pub algebra: GradedAlgebra,
    pub s_max: usize,
    pub d_max: i64,
    /// Basis indices of `A` spanning the augmentation ideal.
    pub letters: Vec<usize>,
    slices: BTreeMap<(usize, i64), Slice>,
    differentials: BTreeMap<(usize, i64), SparseMatrix>,
}

/// Checks that `a` is connected and augmented by the projection onto the
/// degree-0 unit.
pub fn require_connected(a: &GradedAlgebra) -> Result<()> {
    let aug = a.augmentation.as_ref().ok_or(Error::NotAugmented)?;
    if !a.is_connected() {
        return Err(Error::NotConnected("degree-0 part must be spanned by the unit, degrees non-negative".into()));
    }
    if *aug != a.unit {
        return Err(Error::NotConnected("augmentation must be the projection onto degree 0".into()));
    }
    Ok(())
}

impl BarComplex {
    pub fn field(&self) -> &Field {
        &self.algebra.field
    }

    pub fn slice(&self, s: usize, d: i64) -> Option<&Slice> {
        self.slices.get(&(s, d))
    }

    pub fn slices(&self) -> impl Iterator<Item = (&(usize, i64), &Slice)> {
        self.slices.iter()
    }

    pub fn dim(&self, s: usize, d: i64) -> usize {
        self.slice(s, d).map_or(0, Slice::dim)
    }

    /// Differential out of `(s, d)` into `(s−1, d)`; a `0 × dim` matrix when
    /// `s = 0`.
    pub fn differential(&self, s: usize, d: i64) -> SparseMatrix {
        match self.differentials.get(&(s, d)) {
            Some(m) => m.clone(),
            None => {
                let rows = if s == 0 { 0 } else { self.dim(s - 1, d) };
                SparseMatrix::zero(self.field(), rows, self.dim(s, d))
            }
        }
    }

    /// Label of a word, e.g. `[x|y^2]`.
    pub fn word_label(&self, w: &[usize]) -> String {
        let inner: Vec<&str> = w.iter().map(|&l| self.algebra.label(l)).collect();
        format!("[{}]", inner.join("|"))
    }

    /// `d ∘ d = 0` in every stored bidegree; the first failing bidegree.
    pub fn check_d_squared(&self) -> Option<(usize, i64)> {
        for &(s, d) in self.slices.keys() {
            if s < 2 {
                continue;
            }
            let dd = self.differential(s - 1, d).compose(&self.differential(s, d)).expect("composable");
            if !dd.is_zero() {
                return Some((s, d));
            }
        }
        None
    }

    /// Shuffle product of two chains, `Σ_σ sgn(σ) σ(u|v)`.
    pub fn shuffle(&self, (s1, d1): (usize, i64), u: &SparseVec, (s2, d2): (usize, i64), v: &SparseVec) -> Option<SparseVec> {
        let f = self.field();
        let (a, b) = (self.slice(s1, d1)?, self.slice(s2, d2)?);
        let target = self.slice(s1 + s2, d1 + d2)?;
        let mut acc = Accumulator::new();
        for (i, x) in u.iter() {
            for (j, y) in v.iter() {
                let c = f.mul(x, y);
                for (sign, w) in shuffles(&a.words[*i], &b.words[*j]) {
                    let k = target.position(&w).expect("shuffle of words lies in the target slice");
                    acc.add_term(k, &if sign > 0 { c.clone() } else { f.neg(&c) }, f);
                }
            }
        }
        Some(acc.finish(f))
    }

    /// Deconcatenation `[a₁|…|a_s] ↦ Σ_i [a₁|…|a_i] ⊗ [a_{i+1}|…|a_s]`,
    /// grouped by the bidegrees of the two factors. Each value is indexed by
    /// `left * dim(right slice) + right`.
    pub fn deconcatenate(&self, (s, d): (usize, i64), u: &SparseVec) -> BTreeMap<((usize, i64), (usize, i64)), SparseVec> {
        let f = self.field();
        let slice = &self.slices[&(s, d)];
        let mut out: BTreeMap<_, Accumulator> = BTreeMap::new();
        for (i, c) in u.iter() {
            let w = &slice.words[*i];
            for cut in 0..=w.len() {
                let (l, r) = w.split_at(cut);
                let dl: i64 = l.iter().map(|&x| self.algebra.degree(x)).sum();
                let kl = (cut, dl);
                let kr = (s - cut, d - dl);
                let li = self.slices[&kl].position(l).unwrap();
                let ri = self.slices[&kr].position(r).unwrap();
                let rdim = self.slices[&kr].dim();
                out.entry((kl, kr)).or_default().add_term(li * rdim + ri, c, f);
            }
        }
        out.into_iter().map(|(k, v)| (k, v.finish(f))).collect()
    }
}

impl BarComplex {
    /// `d(u·v) = du·v + (−1)^{s₁} u·dv` on every pair of words whose product
    /// stays in range; the first failing pair of bidegrees.
    pub fn check_shuffle_leibniz(&self) -> Option<((usize, i64), (usize, i64))> {
        let f = self.field();
        let keys: Vec<(usize, i64)> = self.slices.keys().copied().filter(|k| k.0 > 0).collect();
        let shuffle_or_zero = |k1: (usize, i64), u: &SparseVec, k2: (usize, i64), v: &SparseVec| {
            if u.is_zero() || v.is_zero() {
                SparseVec::new()
            } else {
                self.shuffle(k1, u, k2, v).unwrap_or_default()
            }
        };
        for &k1 in &keys {
            for &k2 in &keys {
                let k = (k1.0 + k2.0, k1.1 + k2.1);
                if self.slice(k.0, k.1).is_none() {
                    continue;
                }
                let (d1, d2, d) = (self.differential(k1.0, k1.1), self.differential(k2.0, k2.1), self.differential(k.0, k.1));
                for i in 0..self.dim(k1.0, k1.1) {
                    for j in 0..self.dim(k2.0, k2.1) {
                        let (u, v) = (SparseVec::unit(i, f), SparseVec::unit(j, f));
                        let lhs = d.apply(&self.shuffle(k1, &u, k2, &v).unwrap());
                        let a = shuffle_or_zero((k1.0 - 1, k1.1), d1.column(i), k2, &v);
                        let b = shuffle_or_zero(k1, &u, (k2.0 - 1, k2.1), d2.column(j));
                        let rhs = if k1.0 % 2 == 0 { a.add(&b, f) } else { a.sub(&b, f) };
                        if lhs != rhs {
                            return Some((k1, k2));
                        }
                    }
                }
            }
        }
        None
    }

    /// `Δ ∘ d = (d⊗1 + (−1)^{s_l} 1⊗d) ∘ Δ` on every word; the first failing
    /// bidegree.
    pub fn check_deconcatenation_chain_map(&self) -> Option<(usize, i64)> {
        let f = self.field();
        for (&(s, d), slice) in &self.slices {
            if s == 0 {
                continue;
            }
            let dm = self.differential(s, d);
            for i in 0..slice.dim() {
                let dw = dm.column(i);
                let lhs = if dw.is_zero() { BTreeMap::new() } else { self.deconcatenate((s - 1, d), dw) };
                let mut rhs: BTreeMap<_, Accumulator> = BTreeMap::new();
                for ((kl, kr), v) in self.deconcatenate((s, d), &SparseVec::unit(i, f)) {
                    let rdim = self.dim(kr.0, kr.1);
                    for (idx, c) in v.iter() {
                        let (l, r) = (idx / rdim, idx % rdim);
                        if kl.0 > 0 {
                            let nk = ((kl.0 - 1, kl.1), kr);
                            for (x, cx) in self.differential(kl.0, kl.1).column(l).iter() {
                                rhs.entry(nk).or_default().add_term(x * rdim + r, &f.mul(c, cx), f);
                            }
                        }
                        if kr.0 > 0 {
                            let nk = (kl, (kr.0 - 1, kr.1));
                            let nr = self.dim(kr.0 - 1, kr.1);
                            let sc = if kl.0 % 2 == 0 { c.clone() } else { f.neg(c) };
                            for (y, cy) in self.differential(kr.0, kr.1).column(r).iter() {
                                rhs.entry(nk).or_default().add_term(l * nr + y, &f.mul(&sc, cy), f);
                            }
                        }
                    }
                }
                let lhs: BTreeMap<_, _> = lhs.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                let rhs: BTreeMap<_, _> = rhs.into_iter().map(|(k, v)| (k, v.finish(f))).filter(|(_, v)| !v.is_zero()).collect();
                if lhs != rhs {
                    return Some((s, d));
                }
            }
        }
        None
    }
}

/// All shuffles of `a` and `b` with the sign of the interleaving
/// permutation of odd letters.
pub fn shuffles(a: &[usize], b: &[usize]) -> Vec<(i64, Vec<usize>)> {
    fn rec(a: &[usize], b: &[usize], sign: i64, cur: &mut Vec<usize>, out: &mut Vec<(i64, Vec<usize>)>) {
        if a.is_empty() && b.is_empty() {
            out.push((sign, cur.clone()));
            return;
        }
        if let Some((&x, rest)) = a.split_first() {
            cur.push(x);
            rec(rest, b, sign, cur, out);
            cur.pop();
        }
        if let Some((&y, rest)) = b.split_first() {
            // y jumps over the remaining letters of a
            let s = if a.len().is_multiple_of(2) { sign } else { -sign };
            cur.push(y);
            rec(a, rest, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(a, b, 1, &mut Vec::new(), &mut out);
    out
}

/// Bar complex slices with `s ≤ s_max`, `d ≤ d_max`. `d_max` is capped at
/// the degree to which `a` was realized.
pub fn bar_complex(a: &GradedAlgebra, s_max: usize, d_max: i64) -> Result<BarComplex> {
    require_connected(a)?;
    let f = a.field.clone();
    let d_max = match a.degree_bound {
        Some(b) => d_max.min(b),
        None => d_max,
    };
    let letters: Vec<usize> = (0..a.dim()).filter(|&i| a.degree(i) > 0 && a.degree(i) <= d_max).collect();
    let mut slices: BTreeMap<(usize, i64), Slice> = BTreeMap::new();
    slices.insert((0, 0), Slice { words: vec![vec![]], index: HashMap::from([(vec![], 0)]) });
    // words of length s extend words of length s-1 by one letter on the right
    for s in 1..=s_max {
        let prev: Vec<((usize, i64), Vec<Vec<usize>>)> =
            slices.iter().filter(|((ps, _), _)| *ps == s - 1).map(|(k, v)| (*k, v.words.clone())).collect();
        let mut next: BTreeMap<i64, Vec<Vec<usize>>> = BTreeMap::new();
        for ((_, pd), words) in prev {
            for w in words {
                for &l in &letters {
                    let d = pd + a.degree(l);
                    if d > d_max {
                        continue;
                    }
                    let mut nw = w.clone();
                    nw.push(l);
                    next.entry(d).or_default().push(nw);
                }
            }
        }
        for (d, mut words) in next {
            words.sort();
            let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
            slices.insert((s, d), Slice { words, index });
        }
    }
    let mut differentials = BTreeMap::new();
    for (&(s, d), slice) in &slices {
        if s == 0 {
            continue;
        }
        let target = slices.get(&(s - 1, d));
        let rows = target.map_or(0, Slice::dim);
        let mut cols = Vec::with_capacity(slice.dim());
        for w in &slice.words {
            let mut acc = Accumulator::new();
            for i in 0..s.saturating_sub(1) {
                let sign = if (i + 1) % 2 == 0 { f.one() } else { f.neg(&f.one()) };
                let prod = a.mul_basis(w[i], w[i + 1]);
                for (l, c) in prod.iter() {
                    let mut nw = Vec::with_capacity(s - 1);
                    nw.extend_from_slice(&w[..i]);
                    nw.push(*l);
                    nw.extend_from_slice(&w[i + 2..]);
                    let k = target.and_then(|t| t.position(&nw)).expect("face lies in the bar complex");
                    acc.add_term(k, &f.mul(&sign, c), &f);
                }
            }
            cols.push(acc.finish(&f));
        }
        differentials.insert((s, d), SparseMatrix::from_columns(&f, rows, cols));
    }
    Ok(BarComplex { algebra: a.clone(), s_max, d_max, letters, slices, differentials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_presentation, realize, GradedAlgebra};

    fn alg(text: &str, bound: i64) -> GradedAlgebra {
        realize(&parse_presentation(text).unwrap(), bound).unwrap()
    }

    #[test]
    fn trivial_algebra_has_only_the_empty_word() {
        let b = bar_complex(&GradedAlgebra::ground(&Field::rationals()), 4, 4).unwrap();
        assert_eq!(b.slices().count(), 1);
        assert_eq!(b.dim(0, 0), 1);
    }

    #[test]
    fn polynomial_ring_low_slices() {
        let a = alg("Q[x]", 3);
        let b = bar_complex(&a, 3, 3).unwrap();
        let label = |s, d| b.slice(s, d).unwrap().words.iter().map(|w| b.word_label(w)).collect::<Vec<_>>();
        assert_eq!(label(1, 1), vec!["[x]"]);
        assert_eq!(label(2, 2), vec!["[x|x]"]);
        assert_eq!(label(1, 2), vec!["[x^2]"]);
        assert!(b.slice(2, 1).is_none());
    }

    #[test]
    fn d_squared_vanishes() {
        let b = bar_complex(&alg("GF(2)[x]/(x^2)", 6), 6, 6).unwrap();
        assert_eq!(b.check_d_squared(), None);
        let b = bar_complex(&alg("Q[x,y]/(x^2*y)", 5), 5, 5).unwrap();
        assert_eq!(b.check_d_squared(), None);
    }

    #[test]
    fn rejects_non_connected_or_non_augmented() {
        let mut a = alg("Q[x]", 2);
        a.augmentation = None;
        assert!(matches!(bar_complex(&a, 2, 2), Err(Error::NotAugmented)));
        let q = crate::algebra::elementary_abelian_algebra(2, 1, false).unwrap();
        assert!(matches!(bar_complex(&q, 2, 2), Err(Error::NotConnected(_))));
    }

    #[test]
    fn products_are_chain_maps() {
        for (text, bound) in [("Q[x,y]", 4), ("GF(3)[x]/(x^3)", 5), ("GF(2)[x,y]/(x^2,y^2)", 4)] {
            let b = bar_complex(&alg(text, bound), bound as usize, bound).unwrap();
            assert_eq!(b.check_shuffle_leibniz(), None, "{text}");
            assert_eq!(b.check_deconcatenation_chain_map(), None, "{text}");
        }
    }

    #[test]
    fn shuffle_signs() {
        let s = shuffles(&[1], &[2]);
        assert_eq!(s, vec![(1, vec![1, 2]), (-1, vec![2, 1])]);
        assert_eq!(shuffles(&[1, 2], &[3]).len(), 3);
    }
}

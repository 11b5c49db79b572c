//! `Tor^A(k, k)` with the shuffle product and deconcatenation coproduct
//! transported to homology.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::GradedAlgebra;
use crate::coring::{BasisElement, Bialgebra, Convention, Truncation};
use crate::error::{Error, Result};
use crate::linalg::{homology, Accumulator, Homology, SparseVec};

use super::antipode::antipode;
use super::complex::{bar_complex, BarComplex};

/// The Tor Hopf algebra of a connected graded algebra, with the bidegree
/// `(s, d)` of each basis class and its representing bar cycle.
#[derive(Clone, Debug)]
pub struct TorHopf {
    pub hopf: Bialgebra,
    pub bidegrees: Vec<(usize, i64)>,
    pub representatives: Vec<SparseVec>,
    pub n_max: usize,
    pub d_max: i64,
}

impl TorHopf {
    /// Total dimension in each homological degree `0..=n_max` (internal
    /// degrees `≤ d_max`).
    pub fn dims(&self) -> Vec<usize> {
        let mut dims = vec![0; self.n_max + 1];
        for &(s, _) in &self.bidegrees {
            dims[s] += 1;
        }
        dims
    }

    /// Dimension table indexed by homological then internal degree.
    pub fn table(&self) -> BTreeMap<usize, BTreeMap<i64, usize>> {
        let mut t: BTreeMap<usize, BTreeMap<i64, usize>> = BTreeMap::new();
        for &(s, d) in &self.bidegrees {
            *t.entry(s).or_default().entry(d).or_default() += 1;
        }
        t
    }

    /// Basis indices in bidegree `(s, d)`.
    pub fn in_bidegree(&self, s: usize, d: i64) -> Vec<usize> {
        (0..self.bidegrees.len()).filter(|&i| self.bidegrees[i] == (s, d)).collect()
    }

    /// Graded commutativity `uv = (−1)^{|u||v|} vu` on stored basis pairs;
    /// returns a failing pair.
    pub fn check_graded_commutative(&self) -> Option<(usize, usize)> {
        let h = &self.hopf;
        let n = h.dim();
        let f = &h.field;
        for i in 0..n {
            for j in 0..n {
                if !h.pair_known(i, j) {
                    continue;
                }
                let uv = h.mul_basis(i, j);
                let vu = h.mul_basis(j, i);
                let expected = if h.parity(i) * h.parity(j) == 1 { vu.neg(f) } else { vu.clone() };
                if *uv != expected {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Internal-degree bound used by [`tor_bialgebra`]: `n_max` times the top
/// degree for finite-dimensional algebras, where it covers every class of
/// homological degree `≤ n_max`; otherwise `n_max` times the largest
/// generator degree, capped at the realized degree. The second choice is
/// exact for polynomial rings, whose Tor lies on the line `d = s · deg`.
pub fn default_internal_bound(a: &GradedAlgebra, n_max: usize) -> i64 {
    let n = n_max.max(1) as i64;
    match a.degree_bound {
        None => n * a.space.degrees.iter().copied().max().unwrap_or(0).max(1),
        Some(b) => {
            let g = a.generators.iter().map(|&i| a.degree(i)).max().unwrap_or(1).max(1);
            (n * g).min(b)
        }
    }
}

/// `Tor^A(k,k)` in homological degrees `≤ n_max` with the default
/// internal-degree bound.
pub fn tor_bialgebra(a: &GradedAlgebra, n_max: usize) -> Result<TorHopf> {
    tor_bialgebra_bounded(a, n_max, default_internal_bound(a, n_max))
}

/// `Tor^A(k,k)` in bidegrees `s ≤ n_max`, `d ≤ d_max`. Products whose
/// bidegree leaves that region are not stored and marked by the truncation.
pub fn tor_bialgebra_bounded(a: &GradedAlgebra, n_max: usize, d_max: i64) -> Result<TorHopf> {
    if !a.is_commutative() {
        return Err(Error::Unsupported("the shuffle product needs a commutative algebra".into()));
    }
    let bar = bar_complex(a, n_max + 1, d_max)?;
    let d_max = bar.d_max;
    let f = a.field.clone();
    let mut homologies: BTreeMap<(usize, i64), Homology> = BTreeMap::new();
    for (&(s, d), _) in bar.slices() {
        if s > n_max {
            continue;
        }
        let h = homology(&bar.differential(s + 1, d), &bar.differential(s, d))?;
        homologies.insert((s, d), h);
    }
    let mut bidegrees = Vec::new();
    let mut representatives = Vec::new();
    let mut global: HashMap<((usize, i64), usize), usize> = HashMap::new();
    for (&key, h) in &homologies {
        for (k, z) in h.representatives().iter().enumerate() {
            global.insert((key, k), bidegrees.len());
            bidegrees.push(key);
            representatives.push(z.clone());
        }
    }
    let n = bidegrees.len();
    let to_global = |key: (usize, i64), v: &SparseVec| v.reindex(&f, |k| global.get(&(key, k)).copied());

    let mut mult = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (ki, kj) = (bidegrees[i], bidegrees[j]);
            let target = (ki.0 + kj.0, ki.1 + kj.1);
            match homologies.get(&target) {
                Some(h) if target.0 <= n_max && target.1 <= d_max => {
                    let chain = bar.shuffle(ki, &representatives[i], kj, &representatives[j]).expect("slices exist");
                    mult.push(to_global(target, &h.project(&chain)));
                }
                _ => mult.push(SparseVec::new()),
            }
        }
    }

    let mut cache: HashMap<((usize, i64), usize), SparseVec> = HashMap::new();
    let mut project_word = |key: (usize, i64), w: usize| -> SparseVec {
        cache
            .entry((key, w))
            .or_insert_with(|| to_global(key, &homologies[&key].project(&SparseVec::unit(w, &f))))
            .clone()
    };
    let mut comult = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = Accumulator::new();
        for ((kl, kr), v) in bar.deconcatenate(bidegrees[i], &representatives[i]) {
            let rdim = bar.dim(kr.0, kr.1);
            for (idx, c) in v.iter() {
                let pl = project_word(kl, idx / rdim);
                if pl.is_zero() {
                    continue;
                }
                let pr = project_word(kr, idx % rdim);
                for (x, cx) in pl.iter() {
                    for (y, cy) in pr.iter() {
                        acc.add_term(x * n + y, &f.mul(c, &f.mul(cx, cy)), &f);
                    }
                }
            }
        }
        comult.push(acc.finish(&f));
    }

    let unit_index = global[&((0, 0), 0)];
    let complete = (0..=n_max).any(|s| homologies.iter().all(|(&(hs, _), h)| hs != s || h.dim() == 0));
    let labels = class_labels(&bar, &bidegrees, &representatives);
    let basis = bidegrees
        .iter()
        .zip(labels)
        .map(|(&(s, d), label)| BasisElement::new(label, s as i64, d, (s % 2) as u8))
        .collect();
    let mut hopf = Bialgebra {
        field: f.clone(),
        convention: Convention::Homological,
        basis,
        mult,
        unit: SparseVec::unit(unit_index, &f),
        comult,
        counit: SparseVec::unit(unit_index, &f),
        antipode: None,
        truncation: Some(Truncation { s_max: n_max as i64, d_max, complete }),
    };
    hopf.antipode = Some(antipode(&hopf)?);
    Ok(TorHopf { hopf, bidegrees, representatives, n_max, d_max })
}

/// Each class is labelled by the first bar word of its representative.
fn class_labels(bar: &BarComplex, bidegrees: &[(usize, i64)], reps: &[SparseVec]) -> Vec<String> {
    let mut labels: Vec<String> = Vec::with_capacity(reps.len());
    for (key, z) in bidegrees.iter().zip(reps) {
        let slice = bar.slice(key.0, key.1).unwrap();
        let word = z.leading().map(|(w, _)| *w).unwrap_or(0);
        let mut label = bar.word_label(&slice.words[word]);
        while labels.contains(&label) {
            label.push('\'');
        }
        labels.push(label);
    }
    labels
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_presentation, realize};
    use crate::linalg::Field;

    fn alg(text: &str, bound: i64) -> GradedAlgebra {
        realize(&parse_presentation(text).unwrap(), bound).unwrap()
    }

    #[test]
    fn polynomial_ring_in_one_variable() {
        let t = tor_bialgebra(&alg("Q[x]", 4), 4).unwrap();
        assert_eq!(t.dims(), vec![1, 1, 0, 0, 0]);
        let tau = t.in_bidegree(1, 1)[0];
        let h = &t.hopf;
        let q = &h.field;
        assert_eq!(h.primitives(), vec![SparseVec::unit(tau, q)]);
        assert!(h.mul_basis(tau, tau).is_zero());
        assert!(h.check_hopf().all_pass());
    }

    #[test]
    fn polynomial_ring_in_two_variables() {
        let t = tor_bialgebra(&alg("Q[x,y]", 3), 3).unwrap();
        assert_eq!(t.dims(), vec![1, 2, 1, 0]);
        let report = t.hopf.check_hopf();
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(t.check_graded_commutative(), None);
    }

    #[test]
    fn dual_numbers_have_one_class_per_degree() {
        let t = tor_bialgebra(&alg("GF(2)[x]/(x^2)", 6), 6).unwrap();
        assert_eq!(t.dims(), vec![1; 7]);
        assert!(t.hopf.check_hopf().all_pass());
    }

    #[test]
    fn truncated_cubic_antipode_satisfies_both_laws() {
        let t = tor_bialgebra(&alg("GF(3)[x]/(x^3)", 4), 4).unwrap();
        assert_eq!(t.dims(), vec![1; 5]);
        let report = t.hopf.check_hopf();
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(t.check_graded_commutative(), None);
        let two = t.in_bidegree(2, 3);
        assert_eq!(two.len(), 1);
        let s = t.hopf.antipode.as_ref().unwrap();
        assert!(!s.column(two[0]).is_zero());
    }

    #[test]
    fn dual_of_two_variable_tor_is_exterior() {
        let t = tor_bialgebra(&alg("Q[x,y]", 3), 3).unwrap();
        let d = t.hopf.dual().unwrap();
        let q = Field::rationals();
        let gens = [t.in_bidegree(1, 1)[0], t.in_bidegree(1, 1)[1]];
        for &g in &gens {
            assert!(d.mul_basis(g, g).is_zero());
        }
        let (a, b) = (gens[0], gens[1]);
        assert!(!d.mul_basis(a, b).is_zero());
        assert_eq!(d.mul_basis(a, b), &d.mul_basis(b, a).neg(&q));
        assert!(d.check_hopf().all_pass());
    }
}

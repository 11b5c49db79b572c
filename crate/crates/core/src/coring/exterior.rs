use serde::{Deserialize, Serialize};

use crate::algebra::presentation::wedge;
use crate::bar::antipode;
use crate::linalg::{Field, SparseVec};

use super::bialgebra::{Bialgebra, Convention};
use super::coring::BasisElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DegreeMode {
    Graded,
    Ungraded,
}

/// Exterior Hopf algebra on `n` primitive generators `e1..en`. Basis: the
/// increasing wedge words ordered by length, then lexicographically. Signs
/// follow the word-length parity in both modes; in ungraded mode every
/// element has degree 0.
pub fn exterior_bialgebra(n: usize, mode: DegreeMode, field: &Field) -> Bialgebra {
    let f = field;
    let mut subsets: Vec<Vec<usize>> = (0u32..(1 << n)).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let dim = subsets.len();
    let index = |s: &[usize]| subsets.iter().position(|x| x == s).unwrap();
    let mut mult = Vec::with_capacity(dim * dim);
    for a in &subsets {
        for b in &subsets {
            mult.push(match wedge(a, b) {
                Some((sign, s)) => SparseVec::single(index(&s), f.from_i64(sign), f),
                None => SparseVec::new(),
            });
        }
    }
    let comult = subsets
        .iter()
        .map(|s| {
            let mut terms = Vec::new();
            for mask in 0u32..(1 << s.len()) {
                let left: Vec<usize> = (0..s.len()).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                let right: Vec<usize> = (0..s.len()).filter(|i| mask >> i & 1 == 0).map(|i| s[i]).collect();
                let (sign, _) = wedge(&left, &right).unwrap();
                terms.push((index(&left) * dim + index(&right), f.from_i64(sign)));
            }
            SparseVec::from_entries(terms, f)
        })
        .collect();
    let basis = subsets
        .iter()
        .map(|s| {
            let label = if s.is_empty() { "1".to_string() } else { s.iter().map(|i| format!("e{}", i + 1)).collect::<Vec<_>>().join("^") };
            let len = s.len() as i64;
            let degree = if mode == DegreeMode::Graded { len } else { 0 };
            BasisElement::new(label, degree, len, (len % 2) as u8)
        })
        .collect();
    let mut b = Bialgebra {
        field: f.clone(),
        convention: if mode == DegreeMode::Graded { Convention::Homological } else { Convention::Ungraded },
        basis,
        mult,
        unit: SparseVec::unit(0, f),
        comult,
        counit: SparseVec::unit(0, f),
        antipode: None,
        truncation: None,
    };
    b.antipode = Some(antipode(&b).expect("exterior bialgebras are connected"));
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_generators_is_the_field() {
        let b = exterior_bialgebra(0, DegreeMode::Graded, &Field::rationals());
        assert_eq!(b.dim(), 1);
        assert!(b.check_hopf().all_pass());
    }

    #[test]
    fn one_ungraded_generator_over_gf2_is_primitive() {
        let f = Field::prime(2).unwrap();
        let b = exterior_bialgebra(1, DegreeMode::Ungraded, &f);
        assert_eq!(b.dim(), 2);
        // Δ(e) = e⊗1 + 1⊗e
        let expected = SparseVec::from_entries(vec![(2, f.one()), (1, f.one())], &f);
        assert_eq!(b.comult[1], expected);
        assert!(b.check_hopf().all_pass());
    }

    #[test]
    fn graded_two_generators() {
        let q = Field::rationals();
        let b = exterior_bialgebra(2, DegreeMode::Graded, &q);
        let degrees: Vec<i64> = b.basis.iter().map(|e| e.degree).collect();
        assert_eq!(degrees, vec![0, 1, 1, 2]);
        // e1e2 = −e2e1, structure constants by wedge-monomial multiplication
        assert_eq!(b.mul_basis(1, 2), &SparseVec::unit(3, &q));
        assert_eq!(b.mul_basis(2, 1), &SparseVec::unit(3, &q).neg(&q));
        let report = b.check_hopf();
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn primitives_and_grouplikes() {
        let f = Field::prime(2).unwrap();
        for n in 0..=3 {
            let b = exterior_bialgebra(n, DegreeMode::Ungraded, &f);
            assert_eq!(b.primitives().len(), n);
            assert_eq!(b.grouplikes(), vec![SparseVec::unit(0, &f)]);
        }
        let q = Field::rationals();
        let b = exterior_bialgebra(3, DegreeMode::Graded, &q);
        assert_eq!(b.primitives().len(), 3);
        assert_eq!(b.grouplikes(), vec![SparseVec::unit(0, &q)]);
    }

    #[test]
    fn primitives_close_under_graded_commutator() {
        let q = Field::rationals();
        let b = exterior_bialgebra(3, DegreeMode::Graded, &q);
        let prims = b.primitives();
        let span = crate::linalg::Echelon::from_vectors(&q, b.dim(), prims.iter());
        for x in &prims {
            for y in &prims {
                let br = b.graded_commutator(x, 1, y, 1);
                assert!(span.contains(&br));
            }
        }
    }

    #[test]
    fn dual_is_involutive() {
        let q = Field::rationals();
        let b = exterior_bialgebra(2, DegreeMode::Graded, &q);
        let d = b.dual().unwrap();
        assert!(d.check_hopf().all_pass());
        assert_eq!(d.convention, Convention::Cohomological);
        let dd = d.dual().unwrap();
        assert!(dd.same_constants(&b));
        assert_eq!(dd.basis, b.basis);
    }
}

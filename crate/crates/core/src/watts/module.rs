use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::GradedAlgebra;
use crate::linalg::{intertwiners, Echelon, Field, SparseMatrix, SparseVec};

/// A finite dimensional graded right module over a realized algebra `S`,
/// with one action matrix `m ↦ m·e_s` per basis element of `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    pub field: Field,
    pub degrees: Vec<i64>,
    pub action: Vec<SparseMatrix>,
}

impl RightModule {
    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn regular(s: &GradedAlgebra) -> Self {
        let f = &s.field;
        RightModule {
            field: f.clone(),
            degrees: s.space.degrees.clone(),
            action: (0..s.dim()).map(|t| s.right_mult(&SparseVec::unit(t, f))).collect(),
        }
    }

    /// `⊕_i S(−d_i)` with generator `i` in degree `d_i`; basis `(i, s)` at
    /// index `i * dim S + s`.
    pub fn free(s: &GradedAlgebra, generator_degrees: &[i64]) -> Self {
        generator_degrees
            .iter()
            .map(|&d| RightModule::regular(s).shift(d))
            .reduce(|a, b| a.direct_sum(&b))
            .unwrap_or_else(|| RightModule { field: s.field.clone(), degrees: vec![], action: vec![SparseMatrix::zero(&s.field, 0, 0); s.dim()] })
    }

    /// `M(k)` with every degree raised by `k`.
    pub fn shift(&self, k: i64) -> Self {
        RightModule { degrees: self.degrees.iter().map(|d| d + k).collect(), ..self.clone() }
    }

    /// Right multiplication by an element of `S`.
    pub fn act_matrix(&self, s: &SparseVec) -> SparseMatrix {
        let n = self.dim();
        s.iter().fold(SparseMatrix::zero(&self.field, n, n), |acc, (t, c)| acc.add(&self.action[*t].scale(c)).expect("square"))
    }

    pub fn direct_sum(&self, other: &RightModule) -> Self {
        RightModule {
            field: self.field.clone(),
            degrees: self.degrees.iter().chain(&other.degrees).copied().collect(),
            action: self.action.iter().zip(&other.action).map(|(a, b)| a.direct_sum(b).expect("same field")).collect(),
        }
    }

    /// The quotient `S / yS` of the regular module by a right ideal generated
    /// by a basis element, shifted by `k`.
    pub fn cyclic_quotient(s: &GradedAlgebra, y: usize, k: i64) -> Self {
        let f = &s.field;
        let ideal = Echelon::from_vectors(f, s.dim(), (0..s.dim()).map(|t| s.mul_basis(y, t)));
        let keep = ideal.free_columns();
        let index = |c: usize| keep.iter().position(|&q| q == c);
        let action = (0..s.dim())
            .map(|t| {
                let cols = keep.iter().map(|&c| ideal.reduce(s.mul_basis(c, t)).reindex(f, index)).collect();
                SparseMatrix::from_columns(f, keep.len(), cols)
            })
            .collect();
        RightModule { field: f.clone(), degrees: keep.iter().map(|&c| s.degree(c) + k).collect(), action }
    }

    /// The same module in the basis given by the columns of an invertible
    /// degree-preserving `p`.
    pub fn change_basis(&self, p: &SparseMatrix) -> Self {
        let inv = p.inverse().expect("invertible");
        let action = self.action.iter().map(|a| inv.compose(&a.compose(p).expect("square")).expect("square")).collect();
        RightModule { action, ..self.clone() }
    }

    /// Unitriangular change of basis mixing vectors of equal degree, in a
    /// random order.
    pub fn scrambled<R: Rng + ?Sized>(&self, rng: &mut R) -> Self {
        let f = &self.field;
        let n = self.dim();
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut entries = Vec::new();
        for (a, &r) in order.iter().enumerate() {
            entries.push((r, r, f.one()));
            for &c in &order[a + 1..] {
                if self.degrees[r] == self.degrees[c] && rng.gen_bool(0.5) {
                    entries.push((r, c, f.random(rng)));
                }
            }
        }
        self.change_basis(&SparseMatrix::from_entries(f, n, n, &entries).expect("in range"))
    }

    /// Basis of the degree-preserving module maps `self → other`.
    pub fn hom(&self, other: &RightModule) -> Vec<SparseMatrix> {
        let pairs: Vec<_> = self.action.iter().zip(&other.action).collect();
        let all = intertwiners(&self.field, self.dim(), other.dim(), &pairs);
        let ambient = self.dim() * other.dim();
        let mut span = Echelon::new(&self.field, ambient);
        let mut out = Vec::new();
        for g in all {
            let h = self.homogeneous_part(other, &g);
            if !h.is_zero() && span.insert(&h.flatten()).is_some() {
                out.push(h);
            }
        }
        out
    }

    fn homogeneous_part(&self, other: &RightModule, g: &SparseMatrix) -> SparseMatrix {
        let entries: Vec<_> = g.entries().into_iter().filter(|(r, c, _)| other.degrees[*r] == self.degrees[*c]).collect();
        SparseMatrix::from_entries(&self.field, other.dim(), self.dim(), &entries).expect("in range")
    }

    /// Whether `m·(st) = (m·s)·t` and `m·1 = m`.
    pub fn is_module(&self, s: &GradedAlgebra) -> bool {
        let n = self.dim();
        if self.act_matrix(&s.unit) != SparseMatrix::identity(&self.field, n) {
            return false;
        }
        (0..s.dim()).all(|a| {
            (0..s.dim()).all(|b| {
                !s.in_range(s.degree(a) + s.degree(b))
                    || self.act_matrix(s.mul_basis(a, b)) == self.action[b].compose(&self.action[a]).expect("square")
            })
        })
    }
}

/// A random direct sum of shifted cyclic quotients `S/yS` and copies of
/// `S` of total dimension at most `max_dim`, in a scrambled basis.
pub fn random_module<R: Rng + ?Sized>(s: &GradedAlgebra, max_dim: usize, rng: &mut R) -> RightModule {
    let mut total = RightModule::free(s, &[]);
    for _ in 0..64 {
        let k = rng.gen_range(-1..=1);
        let piece = if rng.gen_bool(0.3) { RightModule::regular(s).shift(k) } else { RightModule::cyclic_quotient(s, rng.gen_range(0..s.dim()), k) };
        if piece.dim() == 0 || total.dim() + piece.dim() > max_dim {
            continue;
        }
        total = total.direct_sum(&piece);
        if rng.gen_bool(0.4) {
            break;
        }
    }
    if total.dim() == 0 {
        total = RightModule::regular(s);
    }
    total.scrambled(rng)
}

/// `size` random modules of dimension at most 8, each followed by its shifts
/// by `−2..=2` (the unshifted module included).
pub fn battery<R: Rng + ?Sized>(s: &GradedAlgebra, size: usize, rng: &mut R) -> Vec<RightModule> {
    (0..size)
        .flat_map(|_| {
            let m = random_module(s, 8, rng);
            (-2..=2).map(move |k| m.shift(k))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_presentation, realize};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn dual_numbers() -> GradedAlgebra {
        realize(&parse_presentation("Q[x]/(x^2)").unwrap(), 4).unwrap()
    }

    #[test]
    fn battery_modules_are_modules() {
        let s = dual_numbers();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let b = battery(&s, 6, &mut rng);
        assert_eq!(b.len(), 30);
        for m in &b {
            assert!(m.dim() <= 8 && m.dim() > 0);
            assert!(m.is_module(&s));
        }
    }

    #[test]
    fn quotient_by_x_is_the_field() {
        let s = dual_numbers();
        let x = s.index_of("x").unwrap();
        let k = RightModule::cyclic_quotient(&s, x, 2);
        assert_eq!(k.degrees, vec![2]);
        assert!(k.action[x].is_zero());
        assert_eq!(RightModule::cyclic_quotient(&s, 0, 0).dim(), 0);
    }

    #[test]
    fn homs_are_homogeneous_module_maps() {
        let s = dual_numbers();
        let reg = RightModule::regular(&s);
        assert_eq!(reg.hom(&reg).len(), 1);
        assert!(reg.hom(&reg.shift(1)).is_empty());
        assert_eq!(reg.shift(1).hom(&reg).len(), 1);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let m = random_module(&s, 8, &mut rng);
        for g in m.hom(&m) {
            for t in 0..s.dim() {
                assert_eq!(g.compose(&m.action[t]).unwrap(), m.action[t].compose(&g).unwrap());
            }
        }
    }
}

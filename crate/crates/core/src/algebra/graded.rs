use crate::error::{Error, Result};
use crate::linalg::{Accumulator, Field, GradedVectorSpace, Scalar, SparseMatrix, SparseVec};

/// A unital associative algebra, finite dimensional in each degree, stored by
/// structure constants on a graded basis.
///
/// When `degree_bound` is `Some(b)` only degrees `≤ b` were realized and
/// products landing above `b` are not stored; axiom checks skip those
/// instances. `None` means the algebra is complete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    pub field: Field,
    pub space: GradedVectorSpace,
    /// `mult[i * n + j] = e_i · e_j`.
    pub mult: Vec<SparseVec>,
    pub unit: SparseVec,
    pub augmentation: Option<SparseVec>,
    pub degree_bound: Option<i64>,
    /// Basis indices of the algebra generators.
    pub generators: Vec<usize>,
    /// For each basis element, a word in `generators` (indices into that
    /// list) whose ordered product is the element, when one exists.
    pub words: Option<Vec<Vec<usize>>>,
}

/// A failed associativity/unitality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraDefect {
    Associativity(usize, usize, usize),
    LeftUnit(usize),
    RightUnit(usize),
    AugmentationMultiplicative(usize, usize),
    AugmentationUnit,
    Inhomogeneous(usize, usize),
}

impl GradedAlgebra {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.space.degrees[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.space.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.space.labels.iter().position(|l| l == label)
    }

    /// The ground field `k` as a one-dimensional algebra.
    pub fn ground(field: &Field) -> Self {
        GradedAlgebra {
            field: field.clone(),
            space: GradedVectorSpace { degrees: vec![0], labels: vec!["1".into()] },
            mult: vec![SparseVec::unit(0, field)],
            unit: SparseVec::unit(0, field),
            augmentation: Some(SparseVec::unit(0, field)),
            degree_bound: None,
            generators: vec![],
            words: Some(vec![vec![]]),
        }
    }

    /// A simple extension `L = K(θ)` viewed as a `K`-algebra with basis
    /// `1, θ, …, θ^{n-1}` in degree 0. No augmentation.
    pub fn from_extension(ext: &Field) -> Result<Self> {
        let Field::Extension(_) = ext else {
            return Err(Error::InvalidField(format!("{ext} is not a simple extension")));
        };
        let base = ext.base();
        let n = ext.degree();
        let theta = ext.generator().unwrap();
        let powers: Vec<Scalar> = (0..n).map(|i| ext.pow(&theta, i as u64)).collect();
        let coords = |s: &Scalar| -> SparseVec {
            match s {
                Scalar::Ext(v) => SparseVec::from_dense(v, &base),
                _ => unreachable!(),
            }
        };
        let mut mult = Vec::with_capacity(n * n);
        for a in &powers {
            for b in &powers {
                mult.push(coords(&ext.mul(a, b)));
            }
        }
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "θ".to_string(),
                _ => format!("θ^{i}"),
            })
            .collect();
        Ok(GradedAlgebra {
            field: base.clone(),
            space: GradedVectorSpace { degrees: vec![0; n], labels },
            mult,
            unit: SparseVec::unit(0, &base),
            augmentation: None,
            degree_bound: None,
            generators: if n > 1 { vec![1] } else { vec![] },
            words: Some((0..n).map(|i| vec![0; i]).collect()),
        })
    }

    /// Coordinates of an element of the extension `ext` in the basis of
    /// [`GradedAlgebra::from_extension`].
    pub fn extension_coords(ext: &Field, s: &Scalar) -> SparseVec {
        match s {
            Scalar::Ext(v) => SparseVec::from_dense(v, &ext.base()),
            other => SparseVec::single(0, other.clone(), &ext.base()),
        }
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim() + j]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let f = &self.field;
        let mut acc = Accumulator::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_scaled(&f.mul(x, y), self.mul_basis(*i, *j), f);
            }
        }
        acc.finish(f)
    }

    /// Matrix of `v ↦ a·v`.
    pub fn left_mult(&self, a: &SparseVec) -> SparseMatrix {
        let n = self.dim();
        let cols = (0..n).map(|j| self.mul(a, &SparseVec::unit(j, &self.field))).collect();
        SparseMatrix::from_columns(&self.field, n, cols)
    }

    /// Matrix of `v ↦ v·a`.
    pub fn right_mult(&self, a: &SparseVec) -> SparseMatrix {
        let n = self.dim();
        let cols = (0..n).map(|j| self.mul(&SparseVec::unit(j, &self.field), a)).collect();
        SparseMatrix::from_columns(&self.field, n, cols)
    }

    pub fn is_truncated(&self) -> bool {
        self.degree_bound.is_some()
    }

    /// Whether a product of basis elements with total degree `d` is known.
    pub fn in_range(&self, d: i64) -> bool {
        self.degree_bound.is_none_or(|b| d <= b)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    /// Connected: the degree-0 part is spanned by the unit and all degrees
    /// are non-negative.
    pub fn is_connected(&self) -> bool {
        self.space.degrees.iter().all(|&d| d >= 0)
            && self.space.dim_in(0) == 1
            && self.unit.nnz() == 1
            && self.degree(self.unit.leading().unwrap().0) == 0
    }

    /// Exhaustive associativity, unitality and augmentation checks within
    /// the realized degree range. Returns the first defect found.
    pub fn check(&self) -> Option<AlgebraDefect> {
        let n = self.dim();
        let f = &self.field;
        for i in 0..n {
            let e = SparseVec::unit(i, f);
            if self.mul(&self.unit, &e) != e {
                return Some(AlgebraDefect::LeftUnit(i));
            }
            if self.mul(&e, &self.unit) != e {
                return Some(AlgebraDefect::RightUnit(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if self.mul_basis(i, j).iter().any(|(k, _)| self.degree(*k) != self.degree(i) + self.degree(j)) {
                    return Some(AlgebraDefect::Inhomogeneous(i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul_basis(i, j);
                for k in 0..n {
                    if !self.in_range(self.degree(i) + self.degree(j) + self.degree(k)) {
                        continue;
                    }
                    let left = self.mul(ij, &SparseVec::unit(k, f));
                    let right = self.mul(&SparseVec::unit(i, f), self.mul_basis(j, k));
                    if left != right {
                        return Some(AlgebraDefect::Associativity(i, j, k));
                    }
                }
            }
        }
        if let Some(aug) = &self.augmentation {
            if !f.is_one(&aug.dot(&self.unit, f)) {
                return Some(AlgebraDefect::AugmentationUnit);
            }
            for i in 0..n {
                for j in 0..n {
                    if !self.in_range(self.degree(i) + self.degree(j)) {
                        continue;
                    }
                    let lhs = aug.dot(self.mul_basis(i, j), f);
                    let rhs = f.mul(&aug.get(i, f), &aug.get(j, f));
                    if lhs != rhs {
                        return Some(AlgebraDefect::AugmentationMultiplicative(i, j));
                    }
                }
            }
        }
        None
    }

    /// Basis of the augmentation ideal: the kernel of the augmentation.
    pub fn augmentation_ideal(&self) -> Result<Vec<SparseVec>> {
        let aug = self.augmentation.as_ref().ok_or(Error::NotAugmented)?;
        let row = SparseMatrix::from_columns(
            &self.field,
            1,
            (0..self.dim()).map(|i| SparseVec::single(0, aug.get(i, &self.field), &self.field)).collect(),
        );
        Ok(row.kernel())
    }

    /// The product of the generator word, when words are known.
    pub fn word_product(&self, word: &[usize]) -> SparseVec {
        word.iter().fold(self.unit.clone(), |acc, &g| {
            self.mul(&acc, &SparseVec::unit(self.generators[g], &self.field))
        })
    }

    /// Same algebra with its lowest-degree structure constants kept and all
    /// basis elements of degree `> bound` dropped.
    pub fn truncate(&self, bound: i64) -> GradedAlgebra {
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| self.degree(i) <= bound).collect();
        let pos = |i: usize| keep.iter().position(|&k| k == i);
        let f = &self.field;
        let mut mult = Vec::with_capacity(keep.len() * keep.len());
        for &i in &keep {
            for &j in &keep {
                mult.push(self.mul_basis(i, j).reindex(f, pos));
            }
        }
        let bound = match self.degree_bound {
            Some(b) if b <= bound => Some(b),
            _ if self.space.degrees.iter().all(|&d| d <= bound) => self.degree_bound,
            _ => Some(bound),
        };
        GradedAlgebra {
            field: f.clone(),
            space: GradedVectorSpace {
                degrees: keep.iter().map(|&i| self.degree(i)).collect(),
                labels: keep.iter().map(|&i| self.label(i).to_string()).collect(),
            },
            mult,
            unit: self.unit.reindex(f, pos),
            augmentation: self.augmentation.as_ref().map(|a| a.reindex(f, pos)),
            degree_bound: bound,
            generators: self.generators.iter().filter_map(|&g| pos(g)).collect(),
            words: self.words.as_ref().filter(|_| self.generators.iter().all(|&g| pos(g).is_some())).map(|w| keep.iter().map(|&i| w[i].clone()).collect()),
        }
    }
}

/// An algebra homomorphism given by its matrix on bases.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    pub source: GradedAlgebra,
    pub target: GradedAlgebra,
    pub matrix: SparseMatrix,
}

impl AlgebraMap {
    /// Extends generator images multiplicatively along the source's words
    /// and verifies the result is a unital multiplicative map on every basis
    /// pair within range.
    pub fn from_generator_images(source: &GradedAlgebra, target: &GradedAlgebra, images: &[SparseVec]) -> Result<Self> {
        if source.field != target.field {
            return Err(Error::MixedField);
        }
        if images.len() != source.generators.len() {
            return Err(Error::NotAlgebraMap(format!(
                "{} generator images given for {} generators",
                images.len(),
                source.generators.len()
            )));
        }
        let words = source
            .words
            .as_ref()
            .ok_or_else(|| Error::NotAlgebraMap("source basis has no generator words".into()))?;
        let cols = words
            .iter()
            .map(|w| w.iter().fold(target.unit.clone(), |acc, &g| target.mul(&acc, &images[g])))
            .collect();
        let matrix = SparseMatrix::from_columns(&source.field, target.dim(), cols);
        let map = AlgebraMap { source: source.clone(), target: target.clone(), matrix };
        map.verify()?;
        Ok(map)
    }

    pub fn identity(a: &GradedAlgebra) -> Self {
        AlgebraMap { source: a.clone(), target: a.clone(), matrix: SparseMatrix::identity(&a.field, a.dim()) }
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.matrix.apply(v)
    }

    pub fn verify(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        let f = &s.field;
        if self.apply(&s.unit) != t.unit {
            return Err(Error::NotAlgebraMap("unit is not preserved".into()));
        }
        for i in 0..s.dim() {
            for j in 0..s.dim() {
                if !s.in_range(s.degree(i) + s.degree(j)) {
                    continue;
                }
                let lhs = self.apply(s.mul_basis(i, j));
                let rhs = t.mul(self.matrix.column(i), self.matrix.column(j));
                // products that fall outside the target's realized range are unknown there
                let rhs_known = self.matrix.column(i).iter().all(|(a, _)| {
                    self.matrix.column(j).iter().all(|(b, _)| t.in_range(t.degree(*a) + t.degree(*b)))
                });
                if rhs_known && lhs != rhs {
                    return Err(Error::NotAlgebraMap(format!(
                        "f({}·{}) ≠ f({})·f({})",
                        s.label(i),
                        s.label(j),
                        s.label(i),
                        s.label(j)
                    )));
                }
            }
        }
        let _ = f;
        Ok(())
    }
}

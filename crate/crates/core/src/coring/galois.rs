//! Galois extensions `K ⊂ L`, the Galois coring `L ⊗_K L` over `L`, and
//! tensor corings `D ⊗_K (L ⊗_K L)`.

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar, SparseMatrix, SparseVec};

use super::bialgebra::Bialgebra;
use super::coring::{BasisElement, Coring};

/// `L` over `K` with its automorphism group, each automorphism given by its
/// `K`-matrix on the basis `1, θ, …, θ^{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisExtension {
    pub base: Field,
    pub ext: Field,
    /// `L` as a `K`-algebra.
    pub algebra: GradedAlgebra,
    pub group: Vec<SparseMatrix>,
}

impl GaloisExtension {
    /// `K/K`.
    pub fn trivial(k: &Field) -> Self {
        GaloisExtension {
            base: k.clone(),
            ext: k.clone(),
            algebra: GradedAlgebra::ground(k),
            group: vec![SparseMatrix::identity(k, 1)],
        }
    }

    /// Builds the automorphism group of a simple extension. Finite fields
    /// use powers of Frobenius; over `ℚ` only quadratic extensions are
    /// supported, where the conjugate of `θ` is `−a₁ − θ`.
    pub fn new(ext: &Field) -> Result<Self> {
        let Some(minpoly) = ext.minpoly() else {
            return Ok(GaloisExtension::trivial(ext));
        };
        let base = ext.base();
        let d = ext.degree();
        let algebra = GradedAlgebra::from_extension(ext)?;
        let theta = ext.generator().unwrap();
        let images: Vec<Scalar> = if let Some(q) = base.order() {
            (0..d).map(|i| ext.pow(&theta, q.pow(i as u32))).collect()
        } else if d == 1 {
            vec![theta.clone()]
        } else if d == 2 {
            let conj = ext.sub(&ext.neg(&ext.embed(&minpoly[1])), &theta);
            vec![theta.clone(), conj]
        } else {
            return Err(Error::Unsupported(format!("Galois groups of degree {d} extensions of {base}")));
        };
        let group = images
            .iter()
            .map(|rho| {
                let cols = (0..d).map(|i| GradedAlgebra::extension_coords(ext, &ext.pow(rho, i as u64))).collect();
                SparseMatrix::from_columns(&base, d, cols)
            })
            .collect();
        let g = GaloisExtension { base, ext: ext.clone(), algebra, group };
        g.validate()?;
        Ok(g)
    }

    pub fn degree(&self) -> usize {
        self.algebra.dim()
    }

    fn validate(&self) -> Result<()> {
        let d = self.degree();
        if self.group.len() != d {
            return Err(Error::NotGalois(format!("{} automorphisms for degree {d}", self.group.len())));
        }
        let a = &self.algebra;
        let f = &self.base;
        for s in &self.group {
            for i in 0..d {
                for j in 0..d {
                    let lhs = s.apply(a.mul_basis(i, j));
                    let rhs = a.mul(s.column(i), s.column(j));
                    if lhs != rhs {
                        return Err(Error::NotGalois("an automorphism is not multiplicative".into()));
                    }
                }
            }
            if s.apply(&a.unit) != a.unit {
                return Err(Error::NotGalois("an automorphism moves K".into()));
            }
            // the image of θ is a root of the minimal polynomial
            if d > 1 {
                let root = s.column(1);
                let mut value = SparseVec::new();
                let mut power = a.unit.clone();
                for c in self.ext.minpoly().unwrap() {
                    value = value.add_scaled(c, &power, f);
                    power = a.mul(&power, root);
                }
                if !value.is_zero() {
                    return Err(Error::NotGalois("θ is not sent to a root of its minimal polynomial".into()));
                }
            }
        }
        for s in &self.group {
            for t in &self.group {
                let st = s.compose(t)?;
                if !self.group.contains(&st) {
                    return Err(Error::NotGalois("automorphisms do not form a group".into()));
                }
            }
        }
        for (i, s) in self.group.iter().enumerate() {
            if self.group[..i].contains(s) {
                return Err(Error::NotGalois("repeated automorphism".into()));
            }
        }
        Ok(())
    }

    /// Carrier basis label `θ^a⊗θ^b`.
    fn pair_label(&self, a: usize, b: usize) -> String {
        format!("{}⊗{}", self.algebra.label(a), self.algebra.label(b))
    }

    /// Left action of `L` on the first factor, right action on the second,
    /// for `D ⊗ (L ⊗ L)` with `D` of dimension `outer` (index
    /// `i * d² + a * d + b`).
    fn actions(&self, outer: usize) -> (Vec<SparseMatrix>, Vec<SparseMatrix>) {
        let f = &self.base;
        let a = &self.algebra;
        let d = self.degree();
        let n = outer * d * d;
        let mut left = Vec::with_capacity(d);
        let mut right = Vec::with_capacity(d);
        for t in 0..d {
            let mut lc = Vec::with_capacity(n);
            let mut rc = Vec::with_capacity(n);
            for i in 0..outer {
                for x in 0..d {
                    for y in 0..d {
                        let off = i * d * d;
                        lc.push(a.mul_basis(t, x).reindex(f, |s| Some(off + s * d + y)));
                        rc.push(a.mul_basis(y, t).reindex(f, |s| Some(off + x * d + s)));
                    }
                }
            }
            left.push(SparseMatrix::from_columns(f, n, lc));
            right.push(SparseMatrix::from_columns(f, n, rc));
        }
        (left, right)
    }

    /// The `K`-algebra map `L ⊗_K L → ∏_G L`, `x⊗y ↦ (x σ(y))_σ`; bijective
    /// exactly when the extension is Galois.
    pub fn galois_map(&self) -> SparseMatrix {
        let f = &self.base;
        let a = &self.algebra;
        let d = self.degree();
        let cols = (0..d * d)
            .map(|c| {
                let (x, y) = (c / d, c % d);
                let mut entries = Vec::new();
                for (g, s) in self.group.iter().enumerate() {
                    for (o, v) in a.mul(&SparseVec::unit(x, f), s.column(y)).iter() {
                        entries.push((g * d + o, v.clone()));
                    }
                }
                SparseVec::from_entries(entries, f)
            })
            .collect();
        SparseMatrix::from_columns(f, self.group.len() * d, cols)
    }
}

/// The Galois coring `L ⊗_K L` over `L`: `ε(x⊗y) = xy` and
/// `Δ(x⊗y) = (x⊗1) ⊗_L (1⊗y)`, in degree 0.
pub fn galois_coring(g: &GaloisExtension) -> Coring {
    let f = &g.base;
    let d = g.degree();
    let n = d * d;
    let (left, right) = g.actions(1);
    let basis = (0..n).map(|c| BasisElement::plain(g.pair_label(c / d, c % d))).collect();
    let counit = (0..n).map(|c| g.algebra.mul_basis(c / d, c % d).clone()).collect();
    // unit of L is θ^0
    let comult = (0..n).map(|c| SparseVec::unit((c / d) * d * n + (c % d), f)).collect();
    Coring { base: g.algebra.clone(), basis, left, right, comult, counit }
}

/// `D ⊗_K (L ⊗_K L)` over `L` for a coalgebra `D` over `K` with
/// componentwise structure maps. Basis `d_i ⊗ θ^a⊗θ^b` at index
/// `i * d² + a * d + b`.
pub fn coring_tensor(dco: &Bialgebra, g: &GaloisExtension) -> Result<Coring> {
    if dco.field != g.base {
        return Err(Error::BaseMismatch);
    }
    let f = &g.base;
    let d = g.degree();
    let m = dco.dim();
    let n = m * d * d;
    let (left, right) = g.actions(m);
    let mut basis = Vec::with_capacity(n);
    let mut counit = Vec::with_capacity(n);
    let mut comult = Vec::with_capacity(n);
    for i in 0..m {
        let e = &dco.basis[i];
        let eps = dco.counit.get(i, f);
        for x in 0..d {
            for y in 0..d {
                basis.push(BasisElement { label: format!("{}⊗{}", e.label, g.pair_label(x, y)), ..e.clone() });
                counit.push(g.algebra.mul_basis(x, y).scale(&eps, f));
                let mut terms = Vec::new();
                for (jk, c) in dco.comult[i].iter() {
                    let (j, k) = (jk / m, jk % m);
                    let first = j * d * d + x * d;
                    let second = k * d * d + y;
                    terms.push((first * n + second, c.clone()));
                }
                comult.push(SparseVec::from_entries(terms, f));
            }
        }
    }
    Ok(Coring { base: g.algebra.clone(), basis, left, right, comult, counit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coring::{exterior_bialgebra, DegreeMode};

    #[test]
    fn gaussian_rationals_galois_coring() {
        let g = GaloisExtension::new(&Field::gaussian_rationals()).unwrap();
        assert_eq!(g.group.len(), 2);
        assert_eq!(g.galois_map().rank(), 4);
        let c = galois_coring(&g);
        let report = c.check();
        assert!(report.all_pass(), "{report:?}");
        assert!(!c.acts_symmetrically());
        // L-dimension of the carrier: K-dimension 4 over [L:K] = 2
        assert_eq!(c.dim() / g.degree(), 2);
        // Δ(1⊗i) = (1⊗1)⊗(1⊗i)
        assert_eq!(c.comult[1], SparseVec::unit(1, &g.base));
    }

    #[test]
    fn gf4_over_gf2() {
        let l = Field::finite(2, &[1, 1, 1]).unwrap();
        let g = GaloisExtension::new(&l).unwrap();
        assert_eq!(g.group.len(), 2);
        let c = galois_coring(&g);
        assert!(c.check().all_pass());
        assert_eq!(c.dim() / g.degree(), 2);
    }

    #[test]
    fn trivial_extension_gives_trivial_coring() {
        let q = Field::rationals();
        let c = galois_coring(&GaloisExtension::trivial(&q));
        assert_eq!(c.dim(), 1);
        assert!(c.check().all_pass());
    }

    #[test]
    fn transposed_comultiplication_fails() {
        let g = GaloisExtension::new(&Field::gaussian_rationals()).unwrap();
        let mut c = galois_coring(&g);
        // Δ(x⊗y) ↦ (1⊗y)⊗(x⊗1)
        let n = c.dim();
        let d = g.degree();
        c.comult = (0..n).map(|cc| SparseVec::unit((cc % d) * n + (cc / d) * d, &g.base)).collect();
        let report = c.check();
        assert!(!report.all_pass());
    }

    #[test]
    fn tensor_coring_with_exterior() {
        let q = Field::rationals();
        let g = GaloisExtension::new(&Field::gaussian_rationals()).unwrap();
        let d = exterior_bialgebra(1, DegreeMode::Graded, &q);
        let c = coring_tensor(&d, &g).unwrap();
        assert_eq!(c.dim() / g.degree(), 4);
        assert!(c.check().all_pass());
        let unit = exterior_bialgebra(0, DegreeMode::Graded, &q);
        assert_eq!(coring_tensor(&unit, &g).unwrap().comult, galois_coring(&g).comult);
    }
}

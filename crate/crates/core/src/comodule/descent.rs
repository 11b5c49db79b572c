//! Base change of comodules along a Galois extension `K ⊂ L` and descent
//! back, for the tensor coring `D ⊗_K (L ⊗_K L)` over `L`.

use crate::coring::{coring_tensor, galois_coring, Bialgebra, BasisElement, GaloisExtension, RelTensor};
use crate::error::{Error, Result};
use crate::linalg::{Accumulator, Solver, SparseMatrix, SparseVec};

use super::comodule::{same_coring, Comodule};

/// `M ⊗_K L` with `ρ(m⊗ℓ) = Σ (m₀⊗1) ⊗ (m₁⊗1⊗ℓ)`. Basis `m_i⊗θ^a` at
/// index `i * [L:K] + a`.
pub fn induce_comodule(m: &Comodule, d: &Bialgebra, g: &GaloisExtension) -> Result<Comodule> {
    if !same_coring(&m.coring, &d.coring()) {
        return Err(Error::BaseMismatch);
    }
    let c = coring_tensor(d, g)?;
    let f = &g.base;
    let l = &g.algebra;
    let dg = g.degree();
    let (n, nd, nc) = (m.dim(), d.dim(), c.dim());
    let mut basis = Vec::with_capacity(n * dg);
    let mut coaction = Vec::with_capacity(n * dg);
    for i in 0..n {
        for a in 0..dg {
            basis.push(BasisElement { label: format!("{}⊗{}", m.basis[i].label, l.label(a)), ..m.basis[i].clone() });
            let mut acc = Accumulator::new();
            for (idx, v) in m.coaction[i].iter() {
                let (j, k) = (idx / nd, idx % nd);
                acc.add_term((j * dg) * nc + k * dg * dg + a, v, f);
            }
            coaction.push(acc.finish(f));
        }
    }
    let action = (0..dg)
        .map(|t| {
            let cols = (0..n * dg).map(|col| l.mul_basis(col % dg, t).reindex(f, |s| Some((col / dg) * dg + s))).collect();
            SparseMatrix::from_columns(f, n * dg, cols)
        })
        .collect();
    Ok(Comodule { coring: c, basis, action, coaction })
}

/// The `K`-form of a comodule over `D ⊗_K (L ⊗_K L)`: the equalizer of
/// `x ↦ (id⊗ε_D⊗id)ρ(x)` and `x ↦ x ⊗ (1⊗1)`, with the `D`-coaction read
/// off `ρ`.
pub fn descend_comodule(m: &Comodule, d: &Bialgebra, g: &GaloisExtension) -> Result<Comodule> {
    let c = coring_tensor(d, g)?;
    if !same_coring(&m.coring, &c) {
        return Err(Error::BaseMismatch);
    }
    let f = &g.base;
    let dg = g.degree();
    let (n, nd, nc, d2) = (m.dim(), d.dim(), c.dim(), g.degree() * g.degree());
    let gal = RelTensor::new(f, &m.module(), &galois_coring(g).bimodule());
    let cols = (0..n)
        .map(|i| {
            let mut acc = Accumulator::new();
            for (idx, v) in m.coaction[i].iter() {
                let (j, k) = (idx / nc, idx % nc);
                let eps = d.counit.get(k / d2, f);
                if !f.is_zero(&eps) {
                    acc.add_term(j * d2 + k % d2, &f.mul(v, &eps), f);
                }
            }
            acc.add_term(i * d2, &f.neg(&f.one()), f);
            gal.project(&acc.finish(f))
        })
        .collect();
    let forms = SparseMatrix::from_columns(f, gal.dim(), cols).kernel();
    if forms.len() * dg != n {
        return Err(Error::NotDescendable(format!("{} invariant vectors for a space of dimension {n} over K", forms.len())));
    }
    let t = m.target();
    let mut solver = Solver::new(f);
    for (j, v) in forms.iter().enumerate() {
        for k in 0..nd {
            solver.insert(j * nd + k, &t.project(&v.tensor(&SparseVec::unit(k * d2, f), nc, f)));
        }
    }
    let mut coaction = Vec::with_capacity(forms.len());
    for v in &forms {
        let rho = t.project(&m.coact(v));
        coaction.push(solver.express(&rho).ok_or_else(|| Error::NotDescendable("coaction does not restrict to the invariants".into()))?);
    }
    let basis = forms
        .iter()
        .enumerate()
        .map(|(q, v)| {
            let (lead, _) = v.leading().expect("kernel vectors are nonzero");
            let e = &m.basis[*lead];
            let label = match e.label.strip_suffix("⊗1") {
                Some(s) if v.nnz() == 1 => s.to_string(),
                _ => format!("v{}", q + 1),
            };
            BasisElement { label, ..e.clone() }
        })
        .collect();
    Ok(Comodule::over_field(&d.coring(), basis, coaction))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::random_comodule;
    use crate::coring::{exterior_bialgebra, DegreeMode};
    use crate::linalg::Field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn setup() -> (Bialgebra, GaloisExtension) {
        let q = Field::rationals();
        (exterior_bialgebra(1, DegreeMode::Graded, &q), GaloisExtension::new(&Field::gaussian_rationals()).unwrap())
    }

    #[test]
    fn unit_comodule_induces_to_l() {
        let q = Field::rationals();
        let k = exterior_bialgebra(0, DegreeMode::Graded, &q);
        let g = GaloisExtension::new(&Field::gaussian_rationals()).unwrap();
        let up = induce_comodule(&Comodule::unit(&k), &k, &g).unwrap();
        assert_eq!(up.dim(), 2);
        assert!(up.check().all_pass());
        assert!(same_coring(&up.coring, &galois_coring(&g)));
        let down = descend_comodule(&up, &k, &g).unwrap();
        assert_eq!(down.dim(), 1);
        assert_eq!(down.coaction, Comodule::unit(&k).coaction);
    }

    #[test]
    fn galois_coring_descends_to_l() {
        let q = Field::rationals();
        let k = exterior_bialgebra(0, DegreeMode::Graded, &q);
        let g = GaloisExtension::new(&Field::gaussian_rationals()).unwrap();
        let reg = Comodule::regular(&galois_coring(&g));
        assert!(reg.check().all_pass());
        let down = descend_comodule(&reg, &k, &g).unwrap();
        assert_eq!(down.dim(), 2);
        assert_eq!(down.dim() * g.degree(), reg.dim());
    }

    #[test]
    fn round_trip_on_random_comodules() {
        let (d, g) = setup();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..8 {
            let m = random_comodule(&d, 5, &mut rng);
            let up = induce_comodule(&m, &d, &g).unwrap();
            assert!(up.check().all_pass());
            let down = descend_comodule(&up, &d, &g).unwrap();
            assert_eq!(down.dim(), m.dim());
            assert_eq!(down.coaction, m.coaction);
            assert_eq!(down.basis, m.basis);
        }
    }

    #[test]
    fn broken_descent_datum_is_rejected() {
        let (d, g) = setup();
        let m = Comodule::regular(&d.coring());
        let mut up = induce_comodule(&m, &d, &g).unwrap();
        // drop the Galois factor from the coaction of one basis vector
        let nc = up.coring.dim();
        up.coaction[1] = SparseVec::unit(nc, &g.base);
        assert!(matches!(descend_comodule(&up, &d, &g), Err(Error::NotDescendable(_))));
    }
}

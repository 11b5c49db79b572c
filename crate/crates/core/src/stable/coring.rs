//! The coring `C(Π) = \underline{Hom}(M, CM)` over `Λ = \underline{End}(M)`
//! for `M = ⊕_{i<p} k[t]/(t^i)` and the comonad `C = φ_*φ^!` of a cyclic
//! shifted subgroup.
//!
//! `Λ` acts by `λ·f = f∘λ` and `f·λ = C(λ)∘f`, the counit is `f ↦ ε_M∘f`,
//! and `Δ(f)` is the preimage of `δ_M∘f` under the composition map
//! `μ: f⊗g ↦ C(g)∘f` from `C(Π) ⊗_Λ C(Π)` to `\underline{Hom}(M, C²M)`.

use crate::bar::antipode_by_solve;
use crate::coring::{
    exterior_bialgebra, AxiomCheck, BasisElement, Bialgebra, Bimodule, Convention, Coring, DegreeMode, RelTensor, Report,
};
use crate::error::Result;
use crate::linalg::{Accumulator, Scalar, Solver, SparseMatrix, SparseVec};

use super::comonad::comonad_maps;
use super::endo::{stable_endomorphism_algebra, StableEndo};
use super::hom::stable_hom;
use super::module::StableModule;
use super::point::ShiftedPoint;

#[derive(Clone, Debug)]
pub struct StableCoring {
    pub p: u64,
    pub r: usize,
    pub point: Vec<i64>,
    pub endo: StableEndo,
    pub coring: Coring,
    /// Stable dimensions of `\underline{Hom}(M, CM)` and `\underline{Hom}(M, C²M)`.
    pub hom_dims: [usize; 2],
    /// Dimensions of the projective-factoring subspaces of those hom spaces.
    pub projective_dims: [usize; 2],
    /// Jordan type of `C(M)`.
    pub object_blocks: Vec<usize>,
    pub report: Report,
    /// At `p = 2`, the bialgebra with the product from the diagonal of `kE`.
    pub bialgebra: Option<Bialgebra>,
    /// Comparison of `bialgebra` with the exterior bialgebra on `r − 1`
    /// generators.
    pub certificate: Option<Report>,
}

/// Equality of the computed data; `endo` is determined by `p` and compared
/// through its algebra.
impl PartialEq for StableCoring {
    fn eq(&self, other: &Self) -> bool {
        (self.p, self.r, &self.point) == (other.p, other.r, &other.point)
            && self.endo.algebra == other.endo.algebra
            && self.coring == other.coring
            && self.hom_dims == other.hom_dims
            && self.projective_dims == other.projective_dims
            && self.object_blocks == other.object_blocks
            && self.report == other.report
            && self.bialgebra == other.bialgebra
            && self.certificate == other.certificate
    }
}

/// Jordan type of `C(⊕_{i<p} k[t]/(t^i))`.
pub fn comonad_object_blocks(p: u64, r: usize, point: &[i64]) -> Result<Vec<usize>> {
    let pt = ShiftedPoint::new(p, r, point)?;
    let m = StableModule::from_blocks(p, &(1..p as usize).collect::<Vec<_>>())?;
    pt.comonad(&m).jordan_decompose()
}

pub fn shifted_subgroup_coring(p: u64, r: usize, point: &[i64]) -> Result<StableCoring> {
    let pt = ShiftedPoint::new(p, r, point)?;
    let endo = stable_endomorphism_algebra(p)?;
    let f = pt.field().clone();
    let m = &endo.module;
    let maps = comonad_maps(&pt, m);
    let cm = &maps.object;
    let ccm = pt.comonad(cm);
    let h1 = stable_hom(m, cm);
    let h2 = stable_hom(m, &ccm);
    let n = h1.dim();
    let coords1 = |g: &SparseMatrix| h1.coords(g).expect("module map");

    let act = |op: &dyn Fn(&SparseMatrix, &SparseMatrix) -> SparseMatrix| -> Vec<SparseMatrix> {
        endo.elements
            .iter()
            .map(|e| SparseMatrix::from_columns(&f, n, h1.reps.iter().map(|h| coords1(&op(h, e))).collect()))
            .collect()
    };
    let left = act(&|h, e| h.compose(e).expect("composable"));
    let right = act(&|h, e| pt.coinduce_map(e).compose(h).expect("composable"));
    let counit: Vec<SparseVec> = h1
        .reps
        .iter()
        .map(|h| endo.coords(&maps.counit.compose(h).expect("composable")).expect("module map"))
        .collect();

    let bimodule = Bimodule { dim: n, left: left.clone(), right: right.clone() };
    let square = RelTensor::new(&f, &bimodule, &bimodule);
    let mu_cols = (0..square.dim())
        .map(|q| {
            let (i, j) = square.representative(q);
            h2.coords(&pt.coinduce_map(&h1.reps[j]).compose(&h1.reps[i]).expect("composable")).expect("module map")
        })
        .collect();
    let mu = SparseMatrix::from_columns(&f, h2.dim(), mu_cols);
    let mut report = Report::new();
    let mut bijective = AxiomCheck::new("composition C(Π) ⊗_Λ C(Π) → \\underline{Hom}(M, C²M) is bijective");
    bijective.require(mu.rows() == mu.cols() && mu.rank() == mu.rows(), || {
        format!("rank {} from dimension {} to {}", mu.rank(), mu.cols(), mu.rows())
    });
    bijective.finish(&mut report);

    let comult = h1
        .reps
        .iter()
        .map(|h| {
            let target = h2.coords(&maps.comult.compose(h).expect("composable")).expect("module map");
            let Some(pre) = mu.solve(&target) else { return SparseVec::new() };
            let mut acc = Accumulator::new();
            for (q, c) in pre.iter() {
                let (i, j) = square.representative(*q);
                acc.add_term(i * n + j, c, &f);
            }
            acc.finish(&f)
        })
        .collect();
    let basis = (1..=n).map(|i| BasisElement::plain(format!("h{i}"))).collect();
    let coring = Coring { base: endo.algebra.clone(), basis, left, right, comult, counit };
    report.extend(coring.check());

    let (bialgebra, certificate) = if p == 2 {
        let (b, mut cert) = diagonal_bialgebra(&pt, &coring, cm, &h1.reps)?;
        cert.extend(certify_exterior(&b, r));
        (Some(b), Some(cert))
    } else {
        (None, None)
    };
    Ok(StableCoring {
        p,
        r,
        point: pt.point.clone(),
        hom_dims: [h1.dim(), h2.dim()],
        projective_dims: [h1.projective_dim, h2.projective_dim],
        object_blocks: cm.jordan_decompose()?,
        endo,
        coring,
        report,
        bialgebra,
        certificate,
    })
}

/// At `p = 2`, `M = k` and `C(Π) = φ^!k` is a space of functionals on `kE`;
/// the product is `(fg)(y) = Σ f(y')g(y'')` and the unit the augmentation.
fn diagonal_bialgebra(pt: &ShiftedPoint, coring: &Coring, ck: &StableModule, reps: &[SparseMatrix]) -> Result<(Bialgebra, Report)> {
    let f = pt.field().clone();
    let k = StableModule::cyclic(pt.p, 1)?;
    let n = reps.len();
    let ne = pt.ke.dim();
    let mut report = Report::new();
    let vectors: Vec<SparseVec> = reps.iter().map(|h| h.column(0).clone()).collect();
    let mut solver = Solver::new(&f);
    for (i, v) in vectors.iter().enumerate() {
        solver.insert(i, v);
    }
    let functional = |v: &SparseVec| -> Vec<Scalar> {
        (0..ne).map(|y| pt.evaluate(&k, v, &SparseVec::unit(y, &f)).get(0, &f)).collect()
    };
    let values: Vec<Vec<Scalar>> = vectors.iter().map(functional).collect();
    let restrict_to_b = |z: &[Scalar]| -> SparseVec {
        SparseVec::from_entries(pt.free_basis.iter().enumerate().map(|(i, &b)| (i, z[b].clone())).collect(), &f)
    };
    let mut closed = AxiomCheck::new("product lands in φ^!k");
    let mut mult = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let z: Vec<_> = (0..ne)
                .map(|y| {
                    let mut s = f.zero();
                    for (idx, c) in pt.hopf.comult[y].iter() {
                        let term = f.mul(&values[a][idx / ne], &values[b][idx % ne]);
                        s = f.add(&s, &f.mul(c, &term));
                    }
                    s
                })
                .collect();
            let v = restrict_to_b(&z);
            closed.require(functional(&v) == z, || format!("h{}·h{}", a + 1, b + 1));
            mult.push(solver.express(&v).unwrap_or_default());
        }
    }
    closed.finish(&mut report);
    let augmentation: Vec<_> = (0..ne).map(|y| pt.hopf.counit.get(y, &f)).collect();
    let unit = solver.express(&restrict_to_b(&augmentation)).unwrap_or_default();
    let mut unit_check = AxiomCheck::new("augmentation lies in φ^!k");
    unit_check.require(functional(&restrict_to_b(&augmentation)) == augmentation && ck.dim() == n, || "augmentation".into());
    unit_check.finish(&mut report);
    let counit = SparseVec::from_entries((0..n).map(|i| (i, coring.counit[i].get(0, &f))).collect(), &f);
    let mut b = Bialgebra {
        field: f.clone(),
        convention: Convention::Ungraded,
        basis: coring.basis.clone(),
        mult,
        unit,
        comult: coring.comult.clone(),
        counit,
        antipode: None,
        truncation: None,
    };
    b.antipode = antipode_by_solve(&b);
    report.extend(b.check());
    report.extend(b.check_hopf());
    Ok((b, report))
}

/// Dimension `2^{r−1}`, `r − 1` primitives, and equal structure constants
/// with the exterior bialgebra after passing to the basis of products of
/// the primitive basis over subsets.
pub fn certify_exterior(b: &Bialgebra, r: usize) -> Report {
    let f = &b.field;
    let mut report = Report::new();
    let g = r - 1;
    let mut dim = AxiomCheck::new("dimension 2^{r−1}");
    dim.require(b.dim() == 1 << g, || format!("dimension {}", b.dim()));
    dim.finish(&mut report);
    let prims = b.primitives();
    let mut pc = AxiomCheck::new("primitive space of dimension r − 1");
    pc.require(prims.len() == g, || format!("{} primitives", prims.len()));
    pc.finish(&mut report);
    let mut same = AxiomCheck::new("matches the exterior bialgebra on r − 1 generators");
    if b.dim() == 1 << g && prims.len() == g {
        let ext = exterior_bialgebra(g, DegreeMode::Ungraded, f);
        let subsets: Vec<Vec<usize>> = ext
            .basis
            .iter()
            .map(|e| if e.label == "1" { vec![] } else { e.label.split('^').map(|s| s[1..].parse::<usize>().unwrap() - 1).collect() })
            .collect();
        let cols = subsets.iter().map(|s| s.iter().fold(b.unit.clone(), |acc, &i| b.mul(&acc, &prims[i]))).collect();
        let p = SparseMatrix::from_columns(f, b.dim(), cols);
        match b.change_basis(&p, ext.basis.clone()) {
            Ok(c) => same.require(c.same_constants(&ext), || "structure constants differ".into()),
            Err(e) => same.require(false, || format!("products of primitives are not a basis: {e}")),
        }
    } else {
        same.require(false, || "dimension or primitive count differs".into());
    }
    same.finish(&mut report);
    report
}

//! Shared helpers for the integration suites: seeded single-constant
//! perturbations of structures.

#![allow(dead_code)]

use coringlab::algebra::GradedAlgebra;
use coringlab::comodule::{Comodule, DualModule};
use coringlab::coring::{Bialgebra, Coring};
use coringlab::linalg::{Field, SparseMatrix, SparseVec};
use rand::Rng;

/// Adds a random nonzero scalar at coordinate `k` of `v`.
fn bump_at<R: Rng>(v: &SparseVec, k: usize, f: &Field, rng: &mut R) -> SparseVec {
    v.add_scaled(&f.random_nonzero(rng), &SparseVec::unit(k, f), f)
}

/// Perturbs one coordinate `< ambient` of one of `vs`.
pub fn bump_vec<R: Rng>(vs: &mut [SparseVec], ambient: usize, f: &Field, rng: &mut R) {
    let i = rng.gen_range(0..vs.len());
    let k = rng.gen_range(0..ambient);
    vs[i] = bump_at(&vs[i], k, f, rng);
}

/// Perturbs one entry of one of `ms`.
pub fn bump_matrix<R: Rng>(ms: &mut [SparseMatrix], f: &Field, rng: &mut R) {
    let i = rng.gen_range(0..ms.len());
    let rows = ms[i].rows();
    let mut columns = ms[i].columns().to_vec();
    bump_vec(&mut columns, rows, f, rng);
    ms[i] = SparseMatrix::from_columns(f, rows, columns);
}

pub fn perturb_bialgebra<R: Rng>(b: &Bialgebra, rng: &mut R) -> Bialgebra {
    let mut b = b.clone();
    let (n, f) = (b.dim(), b.field.clone());
    let slots = if b.antipode.is_some() { 5 } else { 4 };
    match rng.gen_range(0..slots) {
        0 => bump_vec(&mut b.mult, n, &f, rng),
        1 => bump_vec(&mut b.comult, n * n, &f, rng),
        2 => bump_vec(std::slice::from_mut(&mut b.counit), n, &f, rng),
        3 => bump_vec(std::slice::from_mut(&mut b.unit), n, &f, rng),
        _ => bump_matrix(std::slice::from_mut(b.antipode.as_mut().expect("present")), &f, rng),
    }
    b
}

/// Perturbs the actions, comultiplication or counit. Actions are only
/// touched when the base is bigger than the ground field; a change of
/// comultiplication is redrawn until it survives in `C ⊗_R C`.
pub fn perturb_coring<R: Rng>(c: &Coring, rng: &mut R) -> Coring {
    let mut out = c.clone();
    let (n, m, f) = (c.dim(), c.base.dim(), c.field().clone());
    let first = if m > 1 { 0 } else { 2 };
    match rng.gen_range(first..4) {
        0 => bump_matrix(&mut out.left, &f, rng),
        1 => bump_matrix(&mut out.right, &f, rng),
        2 => {
            let sq = c.square();
            let classes = |v: &[SparseVec]| v.iter().map(|x| sq.project(x)).collect::<Vec<_>>();
            let before = classes(&c.comult);
            while classes(&out.comult) == before {
                out.comult = c.comult.clone();
                bump_vec(&mut out.comult, n * n, &f, rng);
            }
        }
        _ => bump_vec(&mut out.counit, m, &f, rng),
    }
    out
}

/// Perturbs the action or the coaction; a change of coaction is redrawn
/// until it survives in `M ⊗_R C`.
pub fn perturb_comodule<R: Rng>(m: &Comodule, rng: &mut R) -> Comodule {
    let mut out = m.clone();
    let (n, nc, f) = (m.dim(), m.coring.dim(), m.field().clone());
    if m.coring.base.dim() > 1 && rng.gen_bool(0.5) {
        bump_matrix(&mut out.action, &f, rng);
    } else {
        let t = m.target();
        let classes = |v: &[SparseVec]| v.iter().map(|x| t.project(x)).collect::<Vec<_>>();
        let before = classes(&m.coaction);
        while classes(&out.coaction) == before {
            out.coaction = m.coaction.clone();
            bump_vec(&mut out.coaction, n * nc, &f, rng);
        }
    }
    out
}

pub fn perturb_dual_module<R: Rng>(d: &DualModule, rng: &mut R) -> DualModule {
    let mut d = d.clone();
    let f = d.field().clone();
    bump_matrix(&mut d.action, &f, rng);
    d
}

pub fn perturb_algebra<R: Rng>(a: &GradedAlgebra, rng: &mut R) -> GradedAlgebra {
    let mut a = a.clone();
    let (n, f) = (a.dim(), a.field.clone());
    if rng.gen_range(0..n * n + 1) == 0 {
        bump_vec(std::slice::from_mut(&mut a.unit), n, &f, rng);
    } else {
        bump_vec(&mut a.mult, n, &f, rng);
    }
    a
}

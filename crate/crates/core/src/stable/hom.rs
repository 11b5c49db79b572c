use crate::linalg::{Accumulator, Echelon, Field, SparseMatrix, SparseVec, Solver};

use super::module::StableModule;

/// `Hom(M, N)` modulo the maps factoring through a projective, with a basis
/// of representative homomorphisms.
#[derive(Clone, Debug)]
pub struct StableHom {
    pub hom_dim: usize,
    pub projective_dim: usize,
    pub reps: Vec<SparseMatrix>,
    field: Field,
    rows: usize,
    cols: usize,
    solver: Solver,
}

impl StableHom {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates of the class of a homomorphism `g: M → N` in the basis of
    /// representatives; `None` if `g` is not a module map of the right shape.
    pub fn coords(&self, g: &SparseMatrix) -> Option<SparseVec> {
        if g.rows() != self.rows || g.cols() != self.cols {
            return None;
        }
        let m = self.reps.len();
        let c = self.solver.express(&g.flatten())?;
        Some(SparseVec::from_entries(c.iter().filter(|(i, _)| *i < m).cloned().collect(), g.field()))
    }

    /// Representative of a coordinate vector.
    pub fn represent(&self, c: &SparseVec) -> SparseMatrix {
        let mut out = SparseMatrix::zero(&self.field, self.rows, self.cols);
        for (i, x) in c.iter() {
            out = out.add(&self.reps[*i].scale(x)).expect("same shape");
        }
        out
    }
}

/// Vectors of `N` spanning a complement of `t N`: the generators of the
/// projective cover.
pub fn cover_generators(n: &StableModule) -> Vec<SparseVec> {
    let f = &n.field;
    let mut span = Echelon::from_vectors(f, n.dim(), n.t.columns().iter());
    let mut gens = Vec::new();
    for v in 0..n.dim() {
        let e = SparseVec::unit(v, f);
        if span.insert(&e).is_some() {
            gens.push(e);
        }
    }
    gens
}

/// The maps `M → N` factoring through the projective cover `π: P_N → N`,
/// as flattened matrices spanning that subspace. A map `h: M → k[t]/(t^p)`
/// is `m ↦ Σ_j λ(t^{p-1-j} m) t^j` for a functional `λ`, and `π` sends the
/// `l`-th generator to `g_l`.
fn projective_maps(m: &StableModule, n: &StableModule) -> Vec<SparseVec> {
    let f = &m.field;
    let p = m.p as usize;
    let cols = m.dim();
    let source_powers: Vec<SparseMatrix> = (0..p).map(|j| m.t.pow(j as u32).transpose()).collect();
    let mut out = Vec::new();
    for g in cover_generators(n) {
        let mut images = Vec::with_capacity(p);
        let mut v = g;
        for _ in 0..p {
            images.push(v.clone());
            v = n.t.apply(&v);
        }
        for b in 0..cols {
            let mut acc = Accumulator::new();
            for (j, img) in images.iter().enumerate() {
                let row = source_powers[p - 1 - j].column(b);
                for (i, x) in img.iter() {
                    for (c, y) in row.iter() {
                        acc.add_term(i * cols + c, &f.mul(x, y), f);
                    }
                }
            }
            let v = acc.finish(f);
            if !v.is_zero() {
                out.push(v);
            }
        }
    }
    out
}

/// `\underline{Hom}(M, N)`. Representatives are the homomorphism basis
/// vectors that are independent modulo the projective-factoring maps, in
/// the order of the homomorphism basis.
pub fn stable_hom(m: &StableModule, n: &StableModule) -> StableHom {
    let f = &m.field;
    let hom = m.hom(n);
    let ambient = m.dim() * n.dim();
    let projective = projective_maps(m, n);
    let mut span = Echelon::from_vectors(f, ambient, projective.iter());
    let projective_dim = span.dim();
    let reps: Vec<SparseMatrix> = hom.iter().filter(|h| span.insert(&h.flatten()).is_some()).cloned().collect();
    let mut solver = Solver::new(f);
    for (i, r) in reps.iter().enumerate() {
        solver.insert(i, &r.flatten());
    }
    for (i, v) in projective.iter().enumerate() {
        solver.insert(reps.len() + i, v);
    }
    StableHom { hom_dim: hom.len(), projective_dim, reps, field: f.clone(), rows: n.dim(), cols: m.dim(), solver }
}

//! Homology at the middle of `C_{n+1} → C_n → C_{n-1}`.

use super::echelon::Solver;
use super::field::Field;
use super::matrix::SparseMatrix;
use super::vector::SparseVec;
use crate::error::{Error, Result};

/// Homology of a three-term complex with a deterministic basis of
/// representative cycles and a projection from chains to homology
/// coordinates.
#[derive(Clone, Debug)]
pub struct Homology {
    field: Field,
    chain_dim: usize,
    cycles: Vec<SparseVec>,
    representatives: Vec<SparseVec>,
    boundary_count: usize,
    solver: Solver,
}

impl Homology {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn chain_dim(&self) -> usize {
        self.chain_dim
    }

    /// Basis of the cycle space (kernel of the outgoing differential).
    pub fn cycles(&self) -> &[SparseVec] {
        &self.cycles
    }

    /// Cycles whose classes form the homology basis.
    pub fn representatives(&self) -> &[SparseVec] {
        &self.representatives
    }

    /// Homology coordinates of an arbitrary chain under the projection that
    /// kills boundaries and a fixed complement of the cycles. On cycles this
    /// is the class of the cycle.
    pub fn project(&self, chain: &SparseVec) -> SparseVec {
        let f = &self.field;
        let h = self.dim();
        let combo = self.solver.express(chain).expect("solver spans the chain space");
        combo.reindex(f, |l| {
            (l >= self.boundary_count && l < self.boundary_count + h).then(|| l - self.boundary_count)
        })
    }

    /// Expresses a cycle in the representative basis modulo boundaries.
    pub fn express_cycle(&self, z: &SparseVec, d_out: &SparseMatrix) -> Result<SparseVec> {
        if !d_out.apply(z).is_zero() {
            return Err(Error::Inconsistent("chain is not a cycle".into()));
        }
        Ok(self.project(z))
    }

    /// Whether a cycle is a boundary.
    pub fn is_boundary(&self, z: &SparseVec) -> bool {
        self.project(z).is_zero()
    }
}

/// Homology of `d_in: C_{n+1} → C_n` followed by `d_out: C_n → C_{n-1}`.
pub fn homology(d_in: &SparseMatrix, d_out: &SparseMatrix) -> Result<Homology> {
    if d_in.field() != d_out.field() {
        return Err(Error::MixedField);
    }
    if d_in.rows() != d_out.cols() {
        return Err(Error::DimensionMismatch("d_in and d_out do not compose".into()));
    }
    if !d_out.compose(d_in)?.is_zero() {
        return Err(Error::NotAComplex);
    }
    let field = d_in.field().clone();
    let n = d_in.rows();
    let cycles = d_out.kernel();
    let mut solver = Solver::new(&field);
    let boundary_count = d_in.cols();
    for (j, c) in d_in.columns().iter().enumerate() {
        solver.insert(j, c);
    }
    let mut representatives = Vec::new();
    for z in &cycles {
        if solver.insert(boundary_count + representatives.len(), z) {
            representatives.push(z.clone());
        }
    }
    let offset = boundary_count + representatives.len();
    for i in 0..n {
        solver.insert(offset + i, &SparseVec::unit(i, &field));
    }
    Ok(Homology { field, chain_dim: n, cycles, representatives, boundary_count, solver })
}

/// `(dimension, cycle basis of representatives)`; the returned [`Homology`]
/// carries the expression procedure.
pub fn homology_dims(d_in: &SparseMatrix, d_out: &SparseMatrix) -> Result<(usize, Homology)> {
    let h = homology(d_in, d_out)?;
    Ok((h.dim(), h))
}

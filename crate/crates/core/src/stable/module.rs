use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{intertwiners, Echelon, Field, SparseMatrix, SparseVec};

/// A finite-dimensional module over `k[t]/(t^p)`, `k = GF(p)`, given by the
/// matrix of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableModule {
    pub p: u64,
    pub field: Field,
    pub t: SparseMatrix,
}

/// JSON form: `{ p, dim, t_matrix }` with `t_matrix` dense by rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StableModuleJson {
    pub p: u64,
    pub dim: usize,
    pub t_matrix: Vec<Vec<i64>>,
}

impl StableModule {
    /// Validates `t^p = 0`.
    pub fn new(p: u64, t: SparseMatrix) -> Result<Self> {
        let field = Field::prime(p)?;
        if t.rows() != t.cols() {
            return Err(Error::DimensionMismatch("t must be square".into()));
        }
        if t.field() != &field {
            return Err(Error::MixedField);
        }
        if !t.pow(p as u32).is_zero() {
            return Err(Error::NotNilpotent);
        }
        Ok(StableModule { p, field, t })
    }

    /// `k[t]/(t^i)` with basis `1, t, …, t^{i-1}`.
    pub fn cyclic(p: u64, i: usize) -> Result<Self> {
        let field = Field::prime(p)?;
        if i as u64 > p {
            return Err(Error::NotNilpotent);
        }
        let cols = (0..i).map(|j| if j + 1 < i { SparseVec::unit(j + 1, &field) } else { SparseVec::new() }).collect();
        Ok(StableModule { p, field: field.clone(), t: SparseMatrix::from_columns(&field, i, cols) })
    }

    /// Direct sum of cyclic modules of the given sizes.
    pub fn from_blocks(p: u64, sizes: &[usize]) -> Result<Self> {
        let mut m = StableModule { p, field: Field::prime(p)?, t: SparseMatrix::zero(&Field::prime(p)?, 0, 0) };
        for &s in sizes {
            m = m.direct_sum(&StableModule::cyclic(p, s)?);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.t.cols()
    }

    pub fn direct_sum(&self, other: &StableModule) -> StableModule {
        StableModule { p: self.p, field: self.field.clone(), t: self.t.direct_sum(&other.t).expect("same field") }
    }

    pub fn to_json(&self) -> StableModuleJson {
        let t_matrix = (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.field.as_i64(&self.t.get(i, j)).expect("prime field")).collect())
            .collect();
        StableModuleJson { p: self.p, dim: self.dim(), t_matrix }
    }

    pub fn from_json(j: &StableModuleJson) -> Result<Self> {
        let field = Field::prime(j.p)?;
        if j.t_matrix.len() != j.dim || j.t_matrix.iter().any(|r| r.len() != j.dim) {
            return Err(Error::DimensionMismatch(format!("t_matrix must be {0}x{0}", j.dim)));
        }
        let t = if j.dim == 0 { SparseMatrix::zero(&field, 0, 0) } else { SparseMatrix::from_dense_rows(&field, &j.t_matrix) };
        StableModule::new(j.p, t)
    }

    /// Jordan block sizes in descending order, from the ranks of the powers
    /// of `t`.
    pub fn jordan_decompose(&self) -> Result<Vec<usize>> {
        let mut ranks = vec![self.dim()];
        let mut power = SparseMatrix::identity(&self.field, self.dim());
        for _ in 0..self.p {
            power = self.t.compose(&power)?;
            ranks.push(power.rank());
        }
        if *ranks.last().unwrap() != 0 {
            return Err(Error::NotNilpotent);
        }
        // blocks of size ≥ j: ranks[j-1] − ranks[j]
        let mut sizes = Vec::new();
        for j in (1..=self.p as usize).rev() {
            let at_least = ranks[j - 1] - ranks[j];
            let longer = if j < self.p as usize { ranks[j] - ranks[j + 1] } else { 0 };
            sizes.extend(std::iter::repeat_n(j, at_least - longer));
        }
        Ok(sizes)
    }

    /// Quotient by a maximal free summand, the span of `t^j v` over vectors
    /// `v` whose images under `t^{p-1}` are independent.
    pub fn stable_reduce(&self) -> StableModule {
        let f = &self.field;
        let n = self.dim();
        let top = self.t.pow(self.p as u32 - 1);
        let mut image = Echelon::new(f, n);
        let mut free = Echelon::new(f, n);
        for v in 0..n {
            if image.insert(top.column(v)).is_some() {
                let mut w = SparseVec::unit(v, f);
                for _ in 0..self.p {
                    free.insert(&w);
                    w = self.t.apply(&w);
                }
            }
        }
        if free.dim() == 0 {
            return self.clone();
        }
        let keep = free.free_columns();
        let index = |c: usize| keep.iter().position(|&k| k == c);
        let cols = keep.iter().map(|&c| free.reduce(self.t.column(c)).reindex(f, index)).collect();
        StableModule { p: self.p, field: f.clone(), t: SparseMatrix::from_columns(f, keep.len(), cols) }
    }

    /// Basis of `Hom_{k[t]/(t^p)}(self, other)`.
    pub fn hom(&self, other: &StableModule) -> Vec<SparseMatrix> {
        intertwiners(&self.field, self.dim(), other.dim(), &[(&self.t, &other.t)])
    }

    /// Conjugate by a random invertible matrix.
    pub fn scrambled<R: Rng + ?Sized>(&self, rng: &mut R) -> StableModule {
        let f = &self.field;
        let n = self.dim();
        loop {
            let cols = (0..n).map(|_| SparseVec::from_entries((0..n).map(|i| (i, f.random(rng))).collect(), f)).collect();
            let g = SparseMatrix::from_columns(f, n, cols);
            if let Ok(gi) = g.inverse() {
                let t = g.compose(&self.t).and_then(|x| x.compose(&gi)).expect("square");
                return StableModule { p: self.p, field: f.clone(), t };
            }
        }
    }
}

/// Random module of dimension at most `max_dim` with a scrambled basis.
pub fn random_stable_module<R: Rng + ?Sized>(p: u64, max_dim: usize, rng: &mut R) -> Result<StableModule> {
    let mut sizes = Vec::new();
    let mut total = 0;
    while total < max_dim {
        let s = rng.gen_range(1..=(p as usize).min(max_dim - total));
        sizes.push(s);
        total += s;
        if rng.gen_bool(0.4) {
            break;
        }
    }
    Ok(StableModule::from_blocks(p, &sizes)?.scrambled(rng))
}

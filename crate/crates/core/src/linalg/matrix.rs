use super::echelon::{Echelon, Solver};
use super::field::{Field, Scalar};
use super::vector::SparseVec;
use crate::error::{Error, Result};

/// Column-major sparse matrix over one field. Also used as the
/// representation of every linear map in the crate: column `j` is the image
/// of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    field: Field,
    rows: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Self {
        SparseMatrix { field: field.clone(), rows, columns: vec![SparseVec::new(); cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        SparseMatrix {
            field: field.clone(),
            rows: n,
            columns: (0..n).map(|i| SparseVec::unit(i, field)).collect(),
        }
    }

    pub fn from_columns(field: &Field, rows: usize, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns.iter().all(|c| c.max_index().is_none_or(|m| m < rows)));
        SparseMatrix { field: field.clone(), rows, columns }
    }

    /// Builds from `(row, col, value)` triples; duplicate positions and
    /// out-of-range indices are rejected, zeros dropped.
    pub fn from_entries(field: &Field, rows: usize, cols: usize, entries: &[(usize, usize, Scalar)]) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        let mut by_col: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
        for (r, c, x) in entries {
            if *r >= rows || *c >= cols {
                return Err(Error::DimensionMismatch(format!("entry ({r},{c}) outside {rows}x{cols}")));
            }
            if !field.contains(x) {
                return Err(Error::MixedField);
            }
            if !seen.insert((*r, *c)) {
                return Err(Error::DimensionMismatch(format!("duplicate entry ({r},{c})")));
            }
            by_col[*c].push((*r, x.clone()));
        }
        Ok(SparseMatrix {
            field: field.clone(),
            rows,
            columns: by_col.into_iter().map(|c| SparseVec::from_entries(c, field)).collect(),
        })
    }

    pub fn from_dense_rows(field: &Field, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut cols = vec![Vec::new(); c];
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                cols[j].push((i, field.from_i64(x)));
            }
        }
        SparseMatrix {
            field: field.clone(),
            rows: r,
            columns: cols.into_iter().map(|e| SparseVec::from_entries(e, field)).collect(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn entries(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (j, col) in self.columns.iter().enumerate() {
            for (i, x) in col.iter() {
                out.push((*i, j, x.clone()));
            }
        }
        out.sort_by_key(|e| (e.0, e.1));
        out
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.columns[j].get(i, &self.field)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let f = &self.field;
        let mut acc = super::vector::Accumulator::new();
        for (j, x) in v.iter() {
            acc.add_scaled(x, &self.columns[*j], f);
        }
        acc.finish(f)
    }

    fn same_field(&self, other: &SparseMatrix) -> Result<()> {
        if self.field != other.field {
            Err(Error::MixedField)
        } else {
            Ok(())
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.same_field(other)?;
        if self.cols() != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        Ok(SparseMatrix {
            field: self.field.clone(),
            rows: self.rows,
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        })
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.same_field(other)?;
        if self.rows != other.rows || self.cols() != other.cols() {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        Ok(SparseMatrix {
            field: self.field.clone(),
            rows: self.rows,
            columns: self.columns.iter().zip(&other.columns).map(|(a, b)| a.add(b, &self.field)).collect(),
        })
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> SparseMatrix {
        SparseMatrix {
            field: self.field.clone(),
            rows: self.rows,
            columns: self.columns.iter().map(|col| col.scale(c, &self.field)).collect(),
        }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, x) in col.iter() {
                cols[*i].push((j, x.clone()));
            }
        }
        SparseMatrix {
            field: self.field.clone(),
            rows: self.cols(),
            columns: cols.into_iter().map(|e| SparseVec::from_entries(e, &self.field)).collect(),
        }
    }

    /// Row vectors.
    pub fn row_vectors(&self) -> Vec<SparseVec> {
        self.transpose().columns
    }

    /// Kronecker product: `(A⊗B)(e_i⊗e_j) = Ae_i ⊗ Be_j`, index `i·n_B + j`.
    pub fn kronecker(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.same_field(other)?;
        let f = &self.field;
        let mut columns = Vec::with_capacity(self.cols() * other.cols());
        for a in &self.columns {
            for b in &other.columns {
                columns.push(a.tensor(b, other.rows, f));
            }
        }
        Ok(SparseMatrix { field: f.clone(), rows: self.rows * other.rows, columns })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.same_field(other)?;
        let f = &self.field;
        let mut columns = self.columns.clone();
        for c in &other.columns {
            columns.push(c.reindex(f, |i| Some(i + self.rows)));
        }
        Ok(SparseMatrix { field: f.clone(), rows: self.rows + other.rows, columns })
    }

    pub fn rank(&self) -> usize {
        Echelon::from_vectors(&self.field, self.rows, self.columns.iter()).dim()
    }

    /// Reduced echelon basis of the row space.
    pub fn row_echelon(&self) -> Echelon {
        let rows = self.row_vectors();
        Echelon::from_vectors(&self.field, self.cols(), rows.iter())
    }

    /// Basis of the null space, one vector per non-pivot column of the
    /// reduced row echelon form, in increasing column order.
    pub fn kernel(&self) -> Vec<SparseVec> {
        let f = &self.field;
        let ech = self.row_echelon();
        let mut out = Vec::new();
        for free in ech.free_columns() {
            let mut entries = vec![(free, f.one())];
            for p in ech.pivots() {
                let c = ech.row(p).unwrap().get(free, f);
                if !f.is_zero(&c) {
                    entries.push((p, f.neg(&c)));
                }
            }
            out.push(SparseVec::from_entries(entries, f));
        }
        out
    }

    /// Echelon basis of the column space.
    pub fn image(&self) -> Echelon {
        Echelon::from_vectors(&self.field, self.rows, self.columns.iter())
    }

    /// Some `x` with `self · x = b`.
    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        let mut s = Solver::new(&self.field);
        for (j, c) in self.columns.iter().enumerate() {
            s.insert(j, c);
        }
        s.express(b)
    }

    /// Inverse of a square invertible matrix.
    pub fn inverse(&self) -> Result<SparseMatrix> {
        let n = self.rows;
        if self.cols() != n {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let mut s = Solver::new(&self.field);
        for (j, c) in self.columns.iter().enumerate() {
            s.insert(j, c);
        }
        if s.rank() != n {
            return Err(Error::Inconsistent("matrix is singular".into()));
        }
        let columns = (0..n).map(|i| s.express(&SparseVec::unit(i, &self.field)).unwrap()).collect();
        Ok(SparseMatrix { field: self.field.clone(), rows: n, columns })
    }

    /// Matrix made of the chosen columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> SparseMatrix {
        SparseMatrix {
            field: self.field.clone(),
            rows: self.rows,
            columns: cols.iter().map(|&j| self.columns[j].clone()).collect(),
        }
    }

    /// Entries as one vector, `(i, j)` at index `i * cols + j`.
    pub fn flatten(&self) -> SparseVec {
        let n = self.cols();
        let entries = self.columns.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, x)| (i * n + j, x.clone()))).collect();
        SparseVec::from_entries(entries, &self.field)
    }

    /// Inverse of [`flatten`](Self::flatten).
    pub fn unflatten(field: &Field, rows: usize, cols: usize, v: &SparseVec) -> SparseMatrix {
        let mut columns = vec![Vec::new(); cols];
        for (k, x) in v.iter() {
            columns[k % cols].push((k / cols, x.clone()));
        }
        SparseMatrix { field: field.clone(), rows, columns: columns.into_iter().map(|e| SparseVec::from_entries(e, field)).collect() }
    }

    pub fn pow(&self, k: u32) -> SparseMatrix {
        let mut out = SparseMatrix::identity(&self.field, self.rows);
        for _ in 0..k {
            out = self.compose(&out).expect("square matrix");
        }
        out
    }

    pub fn display(&self) -> String {
        let mut s = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols()).map(|j| self.field.display(&self.get(i, j))).collect();
            s.push_str(&format!("[{}]\n", row.join(", ")));
        }
        s
    }
}

/// Basis of the maps `g: k^m → k^n` with `b ∘ g = g ∘ a` for every pair
/// `(a, b)` of operators on source and target.
pub fn intertwiners(field: &Field, m: usize, n: usize, pairs: &[(&SparseMatrix, &SparseMatrix)]) -> Vec<SparseMatrix> {
    let f = field;
    let block = n * m;
    let transposed: Vec<SparseMatrix> = pairs.iter().map(|(a, _)| a.transpose()).collect();
    let mut cols = Vec::with_capacity(block);
    for a in 0..n {
        for b in 0..m {
            let mut acc = super::vector::Accumulator::new();
            for (q, (_, tb)) in pairs.iter().enumerate() {
                let off = q * block;
                // (B g)_{cb} gains B_{ca}; (g A)_{ad} gains A_{bd}
                for (c, x) in tb.column(a).iter() {
                    acc.add_term(off + c * m + b, x, f);
                }
                for (d, x) in transposed[q].column(b).iter() {
                    acc.add_term(off + a * m + d, &f.neg(x), f);
                }
            }
            cols.push(acc.finish(f));
        }
    }
    let eqs = SparseMatrix::from_columns(f, block * pairs.len().max(1), cols);
    eqs.kernel().iter().map(|v| SparseMatrix::unflatten(f, n, m, v)).collect()
}

/// Rank of a matrix. Fails with `MixedField` if entries do not belong to the
/// matrix field.
pub fn rank(m: &SparseMatrix) -> Result<usize> {
    if m.columns.iter().any(|c| c.iter().any(|(_, x)| !m.field.contains(x))) {
        return Err(Error::MixedField);
    }
    Ok(m.rank())
}

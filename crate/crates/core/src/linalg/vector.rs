use super::field::{Field, Scalar};

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize, f: &Field) -> Self {
        SparseVec { entries: vec![(i, f.one())] }
    }

    pub fn single(i: usize, c: Scalar, f: &Field) -> Self {
        if f.is_zero(&c) {
            SparseVec::new()
        } else {
            SparseVec { entries: vec![(i, c)] }
        }
    }

    /// Sorts, merges duplicate indices and drops zeros.
    pub fn from_entries(mut entries: Vec<(usize, Scalar)>, f: &Field) -> Self {
        entries.sort_by_key(|e| e.0);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            match out.last_mut() {
                Some((j, d)) if *j == i => *d = f.add(d, &c),
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !f.is_zero(c));
        SparseVec { entries: out }
    }

    pub fn from_dense(v: &[Scalar], f: &Field) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !f.is_zero(c))
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, n: usize, f: &Field) -> Vec<Scalar> {
        let mut v = vec![f.zero(); n];
        for (i, c) in &self.entries {
            v[*i] = c.clone();
        }
        v
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn get(&self, i: usize, f: &Field) -> Scalar {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => f.zero(),
        }
    }

    pub fn scale(&self, c: &Scalar, f: &Field) -> SparseVec {
        if f.is_zero(c) {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, f.mul(x, c))).collect() }
    }

    pub fn neg(&self, f: &Field) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, f.neg(x))).collect() }
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, c: &Scalar, other: &SparseVec, f: &Field) -> SparseVec {
        if f.is_zero(c) || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, f.mul(c, y)));
                        b.next();
                    } else {
                        let s = f.add(x, &f.mul(c, y));
                        if !f.is_zero(&s) {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, f.mul(c, y)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec, f: &Field) -> SparseVec {
        self.add_scaled(&f.one(), other, f)
    }

    pub fn sub(&self, other: &SparseVec, f: &Field) -> SparseVec {
        self.add_scaled(&f.from_i64(-1), other, f)
    }

    pub fn dot(&self, other: &SparseVec, f: &Field) -> Scalar {
        let mut acc = f.zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc = f.add(&acc, &f.mul(x, y));
                a.next();
                b.next();
            }
        }
        acc
    }

    /// Re-index every entry; entries mapped to `None` are dropped.
    pub fn reindex(&self, f: &Field, map: impl Fn(usize) -> Option<usize>) -> SparseVec {
        SparseVec::from_entries(
            self.entries.iter().filter_map(|(i, c)| map(*i).map(|j| (j, c.clone()))).collect(),
            f,
        )
    }

    /// Tensor product of coordinate vectors, index `i * dim_other + j`.
    pub fn tensor(&self, other: &SparseVec, dim_other: usize, f: &Field) -> SparseVec {
        let mut out = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, x) in &self.entries {
            for (j, y) in &other.entries {
                out.push((i * dim_other + j, f.mul(x, y)));
            }
        }
        SparseVec { entries: out }
    }
}

/// Accumulates a linear combination of sparse vectors.
#[derive(Debug, Default)]
pub struct Accumulator {
    map: std::collections::BTreeMap<usize, Scalar>,
}

impl Accumulator {
    pub fn new() -> Self {
        Accumulator::default()
    }

    pub fn add_term(&mut self, i: usize, c: &Scalar, f: &Field) {
        if f.is_zero(c) {
            return;
        }
        match self.map.get_mut(&i) {
            Some(x) => *x = f.add(x, c),
            None => {
                self.map.insert(i, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, v: &SparseVec, f: &Field) {
        if f.is_zero(c) {
            return;
        }
        for (i, x) in v.iter() {
            self.add_term(*i, &f.mul(c, x), f);
        }
    }

    pub fn finish(self, f: &Field) -> SparseVec {
        SparseVec::from_entries(self.map.into_iter().collect(), f)
    }
}

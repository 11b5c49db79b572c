//! Cyclic shifted subgroups `φ: kC → kE`, `t ↦ Σ a_i x_i`, with restriction
//! and coinduction between `kE`- and `kC`-modules.
//!
//! `kE` is free over `kC` on the monomials `b` not involving the first
//! variable `x_{i0}` with `a_{i0} ≠ 0`. A `kC`-linear `f: kE → N` is stored
//! by its values `f(b)`, so `φ^!N = N^B` with index `b * dim N + n`.

use rand::Rng;

use crate::algebra::{elementary_abelian_algebra, elementary_abelian_hopf, AlgebraMap, GradedAlgebra, GroupHopf};
use crate::coring::{AxiomCheck, Report};
use crate::error::{Error, Result};
use crate::linalg::{intertwiners, Accumulator, Field, SparseMatrix, SparseVec};

use super::module::StableModule;

/// A module over `kE`: the actions of the generators `x_1..x_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeModule {
    pub field: Field,
    pub gens: Vec<SparseMatrix>,
}

impl KeModule {
    pub fn dim(&self) -> usize {
        self.gens.first().map_or(0, |g| g.cols())
    }

    /// Generators commute and have `p`-th power zero.
    pub fn check(&self, p: u64) -> Result<()> {
        for (i, a) in self.gens.iter().enumerate() {
            if !a.pow(p as u32).is_zero() {
                return Err(Error::NotNilpotent);
            }
            for b in &self.gens[i + 1..] {
                if a.compose(b)? != b.compose(a)? {
                    return Err(Error::NotAlgebraMap("generator actions do not commute".into()));
                }
            }
        }
        Ok(())
    }

    /// The action of a monomial with the given exponents.
    pub fn monomial(&self, exponents: &[u32]) -> SparseMatrix {
        let mut out = SparseMatrix::identity(&self.field, self.dim());
        for (g, &e) in self.gens.iter().zip(exponents) {
            out = g.pow(e).compose(&out).expect("square");
        }
        out
    }

    pub fn direct_sum(&self, other: &KeModule) -> KeModule {
        let gens = self.gens.iter().zip(&other.gens).map(|(a, b)| a.direct_sum(b).expect("same field")).collect();
        KeModule { field: self.field.clone(), gens }
    }

    /// Basis of `Hom_{kE}(self, other)`.
    pub fn hom(&self, other: &KeModule) -> Vec<SparseMatrix> {
        let pairs: Vec<_> = self.gens.iter().zip(&other.gens).collect();
        intertwiners(&self.field, self.dim(), other.dim(), &pairs)
    }
}

/// The datum of a cyclic shifted subgroup.
#[derive(Clone, Debug)]
pub struct ShiftedPoint {
    pub p: u64,
    pub r: usize,
    pub point: Vec<i64>,
    pub kc: GradedAlgebra,
    pub ke: GradedAlgebra,
    pub hopf: GroupHopf,
    pub map: AlgebraMap,
    /// `kE` basis indices of the free `kC`-basis `B`, starting with `1`.
    pub free_basis: Vec<usize>,
    /// Coordinates of `kE` basis vectors in the basis `φ(t)^j b`, index
    /// `b * p + j`.
    coords: SparseMatrix,
}

impl ShiftedPoint {
    pub fn new(p: u64, r: usize, point: &[i64]) -> Result<Self> {
        if point.len() != r {
            return Err(Error::DimensionMismatch(format!("point has {} coordinates for rank {r}", point.len())));
        }
        let kc = elementary_abelian_algebra(p, 1, true)?;
        let (ke, hopf) = elementary_abelian_hopf(p, r, true)?;
        let f = ke.field.clone();
        let a: Vec<i64> = point.iter().map(|&x| x.rem_euclid(p as i64)).collect();
        let i0 = a.iter().position(|&x| x != 0).ok_or(Error::ZeroPoint)?;
        let image = SparseVec::from_entries(
            (0..r).map(|i| (ke.generators[i], f.from_i64(a[i]))).collect(),
            &f,
        );
        let map = AlgebraMap::from_generator_images(&kc, &ke, std::slice::from_ref(&image))?;
        let free_basis: Vec<usize> = (0..ke.dim()).filter(|&i| hopf.exponents[i][i0] == 0).collect();
        let y = ke.left_mult(&image);
        let mut cols = Vec::with_capacity(ke.dim());
        for &b in &free_basis {
            let mut v = SparseVec::unit(b, &f);
            for _ in 0..p {
                cols.push(v.clone());
                v = y.apply(&v);
            }
        }
        let coords = SparseMatrix::from_columns(&f, ke.dim(), cols).inverse()?;
        Ok(ShiftedPoint { p, r, point: a, kc, ke, hopf, map, free_basis, coords })
    }

    pub fn field(&self) -> &Field {
        &self.ke.field
    }

    /// Rank of `kE` over `kC`.
    pub fn index(&self) -> usize {
        self.free_basis.len()
    }

    /// `φ(t)` in `kE`.
    pub fn t_image(&self) -> &SparseVec {
        self.map.matrix.column(self.kc.generators[0])
    }

    /// The regular `kE`-module.
    pub fn regular(&self) -> KeModule {
        let f = self.field();
        let gens = self.ke.generators.iter().map(|&g| self.ke.left_mult(&SparseVec::unit(g, f))).collect();
        KeModule { field: f.clone(), gens }
    }

    /// `φ_*X`: the action of `φ(t)`.
    pub fn restrict(&self, x: &KeModule) -> StableModule {
        let f = self.field();
        let mut t = SparseMatrix::zero(f, x.dim(), x.dim());
        for (i, c) in self.t_image().iter() {
            let g = self.ke.generators.iter().position(|&j| j == *i).expect("φ(t) is linear in the generators");
            t = t.add(&x.gens[g].scale(c)).expect("same shape");
        }
        StableModule { p: self.p, field: f.clone(), t }
    }

    /// Matrix of `f ↦ z·f` on `φ^!N` for `z ∈ kE`, where
    /// `(z·f)(b') = f(b'z) = Σ_{b,j} c_{b,j}(b'z) t^j f(b)`.
    fn coinduced_action(&self, z: &SparseVec, n: &StableModule) -> SparseMatrix {
        let f = self.field();
        let d = n.dim();
        let q = self.index();
        let powers: Vec<SparseMatrix> = (0..self.p).map(|j| n.t.pow(j as u32)).collect();
        let mut blocks = vec![vec![SparseMatrix::zero(f, d, d); q]; q];
        for (bp, &b_prime) in self.free_basis.iter().enumerate() {
            let c = self.coords.apply(&self.ke.mul(&SparseVec::unit(b_prime, f), z));
            for (idx, x) in c.iter() {
                let (b, j) = (idx / self.p as usize, idx % self.p as usize);
                blocks[bp][b] = blocks[bp][b].add(&powers[j].scale(x)).expect("same shape");
            }
        }
        assemble(f, d, d, &blocks)
    }

    /// `f(y)` for `f ∈ φ^!N` given by its values on `B` and `y ∈ kE`.
    pub fn evaluate(&self, n: &StableModule, f: &SparseVec, y: &SparseVec) -> SparseVec {
        let k = self.field();
        let d = n.dim();
        let mut acc = Accumulator::new();
        for (idx, c) in self.coords.apply(y).iter() {
            let (b, j) = (idx / self.p as usize, idx % self.p as usize);
            let value = SparseVec::from_entries(f.iter().filter(|(i, _)| i / d == b).map(|(i, x)| (i % d, x.clone())).collect(), k);
            acc.add_scaled(c, &n.t.pow(j as u32).apply(&value), k);
        }
        acc.finish(k)
    }

    /// `φ^!N`, the `kC`-linear maps `kE → N` with `kE` acting by
    /// `(x·f)(y) = f(yx)`.
    pub fn coinduce(&self, n: &StableModule) -> KeModule {
        let f = self.field();
        let gens = self.ke.generators.iter().map(|&g| self.coinduced_action(&SparseVec::unit(g, f), n)).collect();
        KeModule { field: f.clone(), gens }
    }

    /// `φ^!g: f ↦ g∘f`.
    pub fn coinduce_map(&self, g: &SparseMatrix) -> SparseMatrix {
        let q = self.index();
        let f = self.field();
        let blocks: Vec<Vec<SparseMatrix>> = (0..q)
            .map(|i| (0..q).map(|j| if i == j { g.clone() } else { SparseMatrix::zero(f, g.rows(), g.cols()) }).collect())
            .collect();
        assemble(f, g.rows(), g.cols(), &blocks)
    }

    /// The comonad `C = φ_*φ^!` on objects.
    pub fn comonad(&self, n: &StableModule) -> StableModule {
        self.restrict(&self.coinduce(n))
    }

    /// Adjunction counit `ε_N: φ_*φ^!N → N`, `f ↦ f(1)`.
    pub fn counit(&self, n: &StableModule) -> SparseMatrix {
        let f = self.field();
        let d = n.dim();
        let cols = (0..self.index() * d).map(|c| if c < d { SparseVec::unit(c, f) } else { SparseVec::new() }).collect();
        SparseMatrix::from_columns(f, d, cols)
    }

    /// Adjunction unit `η_X: X → φ^!φ_*X`, `x ↦ (y ↦ y·x)`.
    pub fn unit(&self, x: &KeModule) -> SparseMatrix {
        let f = self.field();
        let d = x.dim();
        let blocks: Vec<Vec<SparseMatrix>> =
            self.free_basis.iter().map(|&b| vec![x.monomial(&self.hopf.exponents[b])]).collect();
        assemble(f, d, d, &blocks)
    }

    /// `Hom_{kC}(φ_*X, N) → Hom_{kE}(X, φ^!N)`, `g ↦ φ^!g ∘ η_X`.
    pub fn adjoint_right(&self, x: &KeModule, g: &SparseMatrix) -> SparseMatrix {
        self.coinduce_map(g).compose(&self.unit(x)).expect("composable")
    }

    /// `Hom_{kE}(X, φ^!N) → Hom_{kC}(φ_*X, N)`, `h ↦ ε_N ∘ h`.
    pub fn adjoint_left(&self, n: &StableModule, h: &SparseMatrix) -> SparseMatrix {
        self.counit(n).compose(h).expect("composable")
    }

    /// Both adjunction maps are module maps and mutually inverse on bases of
    /// the two hom spaces.
    pub fn check_adjunction(&self, x: &KeModule, n: &StableModule) -> Report {
        let mut report = Report::new();
        let res = self.restrict(x);
        let coind = self.coinduce(n);
        let left = res.hom(n);
        let right = x.hom(&coind);
        let mut dims = AxiomCheck::new("hom dimensions agree");
        dims.require(left.len() == right.len(), || format!("{} ≠ {}", left.len(), right.len()));
        dims.finish(&mut report);
        let mut forward = AxiomCheck::new("adjoint maps are kE-linear");
        let mut back = AxiomCheck::new("adjoint maps are kC-linear");
        let mut inverse = AxiomCheck::new("adjunction maps are mutually inverse");
        for (i, g) in left.iter().enumerate() {
            let h = self.adjoint_right(x, g);
            let linear = x.gens.iter().zip(&coind.gens).all(|(a, b)| b.compose(&h).ok() == h.compose(a).ok());
            forward.require(linear, || format!("image of Hom_kC basis map {i}"));
            inverse.require(self.adjoint_left(n, &h) == *g, || format!("round trip on Hom_kC basis map {i}"));
        }
        for (i, h) in right.iter().enumerate() {
            let g = self.adjoint_left(n, h);
            back.require(n.t.compose(&g).ok() == g.compose(&res.t).ok(), || format!("image of Hom_kE basis map {i}"));
            inverse.require(self.adjoint_right(x, &g) == *h, || format!("round trip on Hom_kE basis map {i}"));
        }
        forward.finish(&mut report);
        back.finish(&mut report);
        inverse.finish(&mut report);
        report
    }
}

/// Block matrix from `blocks[row][col]`, each `rows × cols`.
fn assemble(f: &Field, rows: usize, cols: usize, blocks: &[Vec<SparseMatrix>]) -> SparseMatrix {
    let nr = blocks.len();
    let nc = blocks.first().map_or(0, |r| r.len());
    let mut columns = Vec::with_capacity(nc * cols);
    for bc in 0..nc {
        for c in 0..cols {
            let mut acc = Accumulator::new();
            for (br, row) in blocks.iter().enumerate() {
                for (i, x) in row[bc].column(c).iter() {
                    acc.add_term(br * rows + i, x, f);
                }
            }
            columns.push(acc.finish(f));
        }
    }
    SparseMatrix::from_columns(f, nr * rows, columns)
}

/// Random `kE`-module: a direct sum of quotients of `kE` by random monomial
/// ideals, in a scrambled basis.
pub fn random_ke_module<R: Rng + ?Sized>(point: &ShiftedPoint, max_dim: usize, rng: &mut R) -> KeModule {
    let f = point.field().clone();
    let reg = point.regular();
    let exps = &point.hopf.exponents;
    let mut total = KeModule { field: f.clone(), gens: vec![SparseMatrix::zero(&f, 0, 0); point.r] };
    loop {
        let cut: Vec<u32> = (0..point.r).map(|_| rng.gen_range(1..=point.p as u32)).collect();
        let keep: Vec<usize> = (0..point.ke.dim()).filter(|&i| exps[i].iter().zip(&cut).all(|(e, c)| e < c)).collect();
        if total.dim() + keep.len() > max_dim {
            if total.dim() > 0 {
                break;
            }
            continue;
        }
        let index = |i: usize| keep.iter().position(|&k| k == i);
        let gens = reg
            .gens
            .iter()
            .map(|g| SparseMatrix::from_columns(&f, keep.len(), keep.iter().map(|&c| g.column(c).reindex(&f, index)).collect()))
            .collect();
        total = total.direct_sum(&KeModule { field: f.clone(), gens });
        if rng.gen_bool(0.5) {
            break;
        }
    }
    let n = total.dim();
    loop {
        let cols = (0..n).map(|_| SparseVec::from_entries((0..n).map(|i| (i, f.random(rng))).collect(), &f)).collect();
        let g = SparseMatrix::from_columns(&f, n, cols);
        if let Ok(gi) = g.inverse() {
            let gens = total.gens.iter().map(|a| g.compose(a).and_then(|x| x.compose(&gi)).expect("square")).collect();
            return KeModule { field: f, gens };
        }
    }
}

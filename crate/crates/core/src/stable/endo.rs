//! The stable endomorphism algebra of `⊕_{i=1}^{p-1} k[t]/(t^i)` compared
//! with the preprojective algebra of type `A_{p-1}`.
//!
//! Vertex `i` is the summand `k[t]/(t^i)`. The arrow `a{i}` acts by
//! `α_i: k[t]/(t^i) → k[t]/(t^{i+1})`, `1 ↦ t`, and `b{i}` by
//! `β_i: k[t]/(t^{i+1}) → k[t]/(t^i)`, `1 ↦ 1`. Products are diagrammatic:
//! `λμ` is `λ` followed by `μ`, matching paths written in traversal order.

use crate::algebra::{GradedAlgebra, QuiverPresentation};
use crate::coring::{AxiomCheck, Report};
use crate::error::Result;
use crate::linalg::{Field, GradedVectorSpace, SparseMatrix, SparseVec};

use super::hom::{stable_hom, StableHom};
use super::module::StableModule;

#[derive(Clone, Debug)]
pub struct StableEndo {
    pub p: u64,
    pub module: StableModule,
    /// The algebra, in the basis of images of quiver paths when those form a
    /// basis, otherwise in the basis of stable representatives.
    pub algebra: GradedAlgebra,
    /// Endomorphism representing each basis element of `algebra`.
    pub elements: Vec<SparseMatrix>,
    pub quiver: GradedAlgebra,
    pub hom: StableHom,
    to_basis: SparseMatrix,
    pub report: Report,
}

impl StableEndo {
    /// Coordinates in `algebra` of the class of an endomorphism.
    pub fn coords(&self, g: &SparseMatrix) -> Option<SparseVec> {
        self.hom.coords(g).map(|c| self.to_basis.apply(&c))
    }
}

fn offsets(p: u64) -> Vec<usize> {
    (1..p as usize).scan(0, |acc, i| {
        let o = *acc;
        *acc += i;
        Some(o)
    })
    .collect()
}

/// Places a map `k[t]/(t^i) → k[t]/(t^j)` into `End(M)`.
fn embed(f: &Field, dim: usize, off: &[usize], i: usize, j: usize, entries: &[(usize, usize)]) -> SparseMatrix {
    let mut cols = vec![SparseVec::new(); dim];
    for &(src, tgt) in entries {
        cols[off[i - 1] + src] = SparseVec::unit(off[j - 1] + tgt, f);
    }
    SparseMatrix::from_columns(f, dim, cols)
}

fn arrow_map(f: &Field, dim: usize, off: &[usize], name: &str) -> SparseMatrix {
    let (kind, i) = name.split_at(1);
    let i: usize = i.parse().expect("arrow index");
    match kind {
        "a" => embed(f, dim, off, i, i + 1, &(0..i).map(|k| (k, k + 1)).collect::<Vec<_>>()),
        "b" => embed(f, dim, off, i + 1, i, &(0..i).map(|k| (k, k)).collect::<Vec<_>>()),
        _ => embed(f, dim, off, i, i, &(0..i).map(|k| (k, k)).collect::<Vec<_>>()),
    }
}

/// The endomorphism of a path label `e{v}` or `x*y*…` in traversal order.
fn path_map(f: &Field, dim: usize, off: &[usize], label: &str) -> SparseMatrix {
    if let Some(v) = label.strip_prefix('e') {
        let v: usize = v.parse().expect("vertex");
        return embed(f, dim, off, v, v, &(0..v).map(|k| (k, k)).collect::<Vec<_>>());
    }
    label
        .split('*')
        .fold(SparseMatrix::identity(f, dim), |acc, a| arrow_map(f, dim, off, a).compose(&acc).expect("square"))
}

pub fn stable_endomorphism_algebra(p: u64) -> Result<StableEndo> {
    let sizes: Vec<usize> = (1..p as usize).collect();
    let module = StableModule::from_blocks(p, &sizes)?;
    let f = module.field.clone();
    let dim = module.dim();
    let off = offsets(p);
    let hom = stable_hom(&module, &module);
    let n = p as usize - 1;
    let quiver = QuiverPresentation::preprojective_a(&f, n)?.realize(2 * n as i64 + 2)?;
    let mut report = Report::new();
    let stably_zero = |g: &SparseMatrix| hom.coords(g).is_some_and(|c| c.is_zero());
    let arrow = |name: String| arrow_map(&f, dim, &off, &name);
    let comp = |first: &SparseMatrix, second: &SparseMatrix| second.compose(first).expect("square");

    if n >= 2 {
        let mut end1 = AxiomCheck::new("β1α1 = 0");
        end1.require(stably_zero(&comp(&arrow("a1".into()), &arrow("b1".into()))), || "β1∘α1 is stably nonzero".into());
        end1.finish(&mut report);
        let m = n - 1;
        let mut end2 = AxiomCheck::new("α_{p−2}β_{p−2} = 0");
        end2.require(stably_zero(&comp(&arrow(format!("b{m}")), &arrow(format!("a{m}")))), || format!("α{m}∘β{m} is stably nonzero"));
        end2.finish(&mut report);
    }
    for (name, lo) in [("α_iβ_i = β_{i+1}α_{i+1} for 2 ≤ i ≤ p−3", 2), ("α_iβ_i = β_{i+1}α_{i+1} for 1 ≤ i ≤ p−3", 1)] {
        let mut mesh = AxiomCheck::new(name);
        for i in lo..n.saturating_sub(1) {
            let lhs = comp(&arrow(format!("b{i}")), &arrow(format!("a{i}")));
            let rhs = comp(&arrow(format!("a{}", i + 1)), &arrow(format!("b{}", i + 1)));
            mesh.require(stably_zero(&lhs.sub(&rhs).expect("same shape")), || format!("fails at i = {i}"));
        }
        mesh.finish(&mut report);
    }
    let mut dims = AxiomCheck::new("dimension equals the quiver algebra");
    dims.require(hom.dim() == quiver.dim(), || format!("{} ≠ {}", hom.dim(), quiver.dim()));
    dims.finish(&mut report);

    let paths: Vec<SparseMatrix> = quiver.space.labels.iter().map(|l| path_map(&f, dim, &off, l)).collect();
    let path_coords: Vec<SparseVec> = paths.iter().map(|g| hom.coords(g).expect("paths are module maps")).collect();
    let matrix = SparseMatrix::from_columns(&f, hom.dim(), path_coords.clone());
    let mut bijective = AxiomCheck::new("path map is bijective");
    let inverse = if matrix.rows() == matrix.cols() { matrix.inverse().ok() } else { None };
    bijective.require(inverse.is_some(), || format!("rank {} of {} paths in dimension {}", matrix.rank(), paths.len(), hom.dim()));
    bijective.finish(&mut report);
    let mut multiplicative = AxiomCheck::new("path map is multiplicative");
    let qn = quiver.dim();
    for u in 0..qn {
        for v in 0..qn {
            let lhs = hom.coords(&comp(&paths[u], &paths[v])).expect("module map");
            let rhs = matrix.apply(quiver.mul_basis(u, v));
            multiplicative.require(lhs == rhs, || format!("{}·{}", quiver.label(u), quiver.label(v)));
        }
    }
    multiplicative.finish(&mut report);

    let (elements, to_basis, space) = match inverse {
        Some(inv) => (paths, inv, quiver.space.clone()),
        None => {
            let k = hom.dim();
            let labels = (1..=k).map(|i| format!("λ{i}")).collect();
            (hom.reps.clone(), SparseMatrix::identity(&f, k), GradedVectorSpace { degrees: vec![0; k], labels })
        }
    };
    let coords = |g: &SparseMatrix| to_basis.apply(&hom.coords(g).expect("module map"));
    let k = elements.len();
    let mut mult = Vec::with_capacity(k * k);
    for u in 0..k {
        for v in 0..k {
            mult.push(coords(&comp(&elements[u], &elements[v])));
        }
    }
    let unit = coords(&SparseMatrix::identity(&f, dim));
    let generators = (0..k).filter(|&i| space.degrees[i] <= 1).collect();
    let algebra = GradedAlgebra {
        field: f.clone(),
        space,
        mult,
        unit,
        augmentation: (n == 1).then(|| SparseVec::unit(0, &f)),
        degree_bound: None,
        generators,
        words: None,
    };
    let mut assoc = AxiomCheck::new("associative and unital");
    let defect = algebra.check();
    assoc.require(defect.is_none(), || format!("{defect:?}"));
    assoc.finish(&mut report);
    Ok(StableEndo { p, module, algebra, elements, quiver, hom, to_basis, report })
}

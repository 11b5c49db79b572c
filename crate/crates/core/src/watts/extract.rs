use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coring::{AxiomCheck, BasisElement, Coring, RelTensor, Report};
use crate::error::{Error, Result};
use crate::linalg::{Accumulator, SparseMatrix, SparseVec};

use super::module::{battery, RightModule};
use super::spec::{ComonadSpec, Evaluated};

/// The coring `C = T(S)` read off from a comonad.
#[derive(Clone, Debug)]
pub struct ExtractedCoring {
    pub coring: Coring,
    /// `T(S)` with its presentation as `S ⊗_A S`.
    pub carrier: Evaluated,
    pub report: Report,
}

/// `M ⊗_S C` as a right module.
pub fn tensor_with(c: &ExtractedCoring, m: &RightModule) -> Evaluated {
    let f = &m.field;
    let a = crate::coring::Bimodule { dim: m.dim(), left: vec![], right: m.action.clone() };
    let tensor = RelTensor::new(f, &a, &c.coring.bimodule());
    let degrees = (0..tensor.dim())
        .map(|r| {
            let (i, q) = tensor.representative(r);
            m.degrees[i] + c.coring.basis[q].degree
        })
        .collect();
    let module = RightModule { field: f.clone(), degrees, action: tensor.module.right.clone() };
    Evaluated { tensor, module }
}

/// The action map `M ⊗_S C → T(M)`, `m ⊗ (s ⊗ s') ↦ (m·s) ⊗ s'`.
pub fn action_map(c: &ExtractedCoring, m: &RightModule, mc: &Evaluated, tm: &Evaluated) -> SparseMatrix {
    let f = &m.field;
    let cols = (0..mc.dim())
        .map(|r| {
            let (i, q) = mc.tensor.representative(r);
            let (u, v) = c.carrier.tensor.representative(q);
            tm.tensor.project_pair(m.action[u].column(i), &SparseVec::unit(v, f))
        })
        .collect();
    SparseMatrix::from_columns(f, tm.dim(), cols)
}

/// Carrier `T(S)`; `S` acts on the left through `T` applied to left
/// multiplications and on the right through the module structure. The
/// counit is `ε_S` and `Δ` is `Δ_S` pulled back along the action map of `C`.
pub fn extract_coring(spec: &ComonadSpec) -> Result<ExtractedCoring> {
    let s = spec.target();
    let f = &s.field;
    let reg = RightModule::regular(s);
    let carrier = spec.evaluate(&reg);
    let n = carrier.dim();
    let left = (0..s.dim()).map(|t| spec.map(&carrier, &carrier, &s.left_mult(&SparseVec::unit(t, f)))).collect();
    let right = carrier.module.action.clone();
    let counit = spec.counit(&reg, &carrier).columns().to_vec();
    let basis = (0..n)
        .map(|q| {
            let (i, j) = carrier.tensor.representative(q);
            BasisElement::new(format!("{}⊗{}", s.label(i), s.label(j)), carrier.module.degrees[q], 0, 0)
        })
        .collect();
    let coring = Coring { base: s.clone(), basis, left, right, comult: vec![SparseVec::new(); n], counit };
    let mut out = ExtractedCoring { coring, carrier, report: Report::new() };

    let cm = out.carrier.module.clone();
    let cc = tensor_with(&out, &cm);
    let tc = spec.evaluate(&cm);
    let alpha = action_map(&out, &cm, &cc, &tc);
    if alpha.rows() != alpha.cols() {
        return Err(Error::Inconsistent(format!("C ⊗_S C has dimension {} but T(C) has {}", alpha.cols(), alpha.rows())));
    }
    let inv = alpha.inverse().map_err(|_| Error::Inconsistent("the action map of C is not invertible".into()))?;
    let delta = spec.comult(&out.carrier, &tc);
    out.coring.comult = (0..n)
        .map(|q| {
            let coords = inv.apply(delta.column(q));
            let mut acc = Accumulator::new();
            for (r, x) in coords.iter() {
                let (a, b) = cc.tensor.representative(*r);
                acc.add_term(a * n + b, x, f);
            }
            acc.finish(f)
        })
        .collect();
    out.report = out.coring.check();
    Ok(out)
}

/// `T(M)`, `M ⊗_S C` and the action map between them.
struct Probe {
    m: RightModule,
    tm: Evaluated,
    mc: Evaluated,
    alpha: SparseMatrix,
}

fn probe(spec: &ComonadSpec, c: &ExtractedCoring, m: &RightModule) -> Probe {
    let tm = spec.evaluate(m);
    let mc = tensor_with(c, m);
    let alpha = action_map(c, m, &mc, &tm);
    Probe { m: m.clone(), tm, mc, alpha }
}

/// A random combination of a basis of degree-preserving maps `M → N`.
pub(crate) fn random_map<R: Rng + ?Sized>(m: &RightModule, n: &RightModule, rng: &mut R) -> Option<SparseMatrix> {
    let f = &m.field;
    let basis = m.hom(n);
    if basis.is_empty() {
        return None;
    }
    let zero = SparseMatrix::zero(f, n.dim(), m.dim());
    let g = basis.iter().fold(zero, |acc, h| acc.add(&h.scale(&f.random(rng))).expect("same shape"));
    Some(if g.is_zero() { basis[0].clone() } else { g })
}

fn is_homogeneous(v: &SparseVec, degrees: &[i64], d: i64) -> bool {
    v.iter().all(|(i, _)| degrees[*i] == d)
}

/// Checks on a seeded battery that the action map `M ⊗_S C → T(M)` is a
/// natural isomorphism carrying `id ⊗ ε` and `id ⊗ Δ` to the counit and
/// comultiplication of `T`, and that `T` satisfies the comonad axioms.
pub fn verify_watts(spec: &ComonadSpec, c: &ExtractedCoring, battery_size: usize, seed: u64) -> Report {
    let mut report = Report::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = spec.target();
    let f = spec.field().clone();
    let n = c.coring.dim();
    let modules = battery(s, battery_size, &mut rng);
    let probes: Vec<Probe> = modules.iter().map(|m| probe(spec, c, m)).collect();

    let mut iso = AxiomCheck::new("action map is an isomorphism");
    let mut graded = AxiomCheck::new("action map preserves degrees");
    let mut counit = AxiomCheck::new("counit transported");
    let mut comult = AxiomCheck::new("comultiplication transported");
    let mut left_counit = AxiomCheck::new("left counit law");
    let mut right_counit = AxiomCheck::new("right counit law");
    let mut coassoc = AxiomCheck::new("coassociativity");
    for (k, p) in probes.iter().enumerate() {
        let m = &p.m;
        let square = p.alpha.rows() == p.alpha.cols();
        iso.require(square && p.alpha.inverse().is_ok(), || format!("module {k}: rank {} of {}×{}", p.alpha.rank(), p.alpha.rows(), p.alpha.cols()));
        graded.require(
            (0..p.mc.dim()).all(|r| is_homogeneous(p.alpha.column(r), &p.tm.module.degrees, p.mc.module.degrees[r])),
            || format!("module {k}"),
        );

        let eps = spec.counit(m, &p.tm);
        let rho_cols = (0..p.mc.dim())
            .map(|r| {
                let (i, q) = p.mc.tensor.representative(r);
                m.act_matrix(&c.coring.counit[q]).column(i).clone()
            })
            .collect();
        let rho = SparseMatrix::from_columns(&f, m.dim(), rho_cols);
        counit.require(eps.compose(&p.alpha).ok() == Some(rho), || format!("module {k}"));

        let ttm = spec.evaluate(&p.tm.module);
        let delta = spec.comult(&p.tm, &ttm);
        let mcc = tensor_with(c, &p.mc.module);
        let id_delta_cols = (0..p.mc.dim())
            .map(|r| {
                let (i, q) = p.mc.tensor.representative(r);
                let mut acc = Accumulator::new();
                for (ab, x) in c.coring.comult[q].iter() {
                    let inner = p.mc.tensor.project_pair(&SparseVec::unit(i, &f), &SparseVec::unit(ab / n, &f));
                    acc.add_scaled(x, &mcc.tensor.project_pair(&inner, &SparseVec::unit(ab % n, &f)), &f);
                }
                acc.finish(&f)
            })
            .collect();
        let id_delta = SparseMatrix::from_columns(&f, mcc.dim(), id_delta_cols);
        let tmc = spec.evaluate(&p.mc.module);
        let alpha_mc = action_map(c, &p.mc.module, &mcc, &tmc);
        let t_alpha = spec.map(&tmc, &ttm, &p.alpha);
        let lhs = delta.compose(&p.alpha).expect("composable");
        let rhs = t_alpha.compose(&alpha_mc).and_then(|x| x.compose(&id_delta)).expect("composable");
        comult.require(lhs == rhs, || format!("module {k}"));

        let id = SparseMatrix::identity(&f, p.tm.dim());
        left_counit.require(spec.counit(&p.tm.module, &ttm).compose(&delta).ok() == Some(id.clone()), || format!("module {k}"));
        right_counit.require(spec.map(&ttm, &p.tm, &eps).compose(&delta).ok() == Some(id), || format!("module {k}"));
        let tttm = spec.evaluate(&ttm.module);
        let co_l = spec.map(&ttm, &tttm, &delta).compose(&delta).expect("composable");
        let co_r = spec.comult(&ttm, &tttm).compose(&delta).expect("composable");
        coassoc.require(co_l == co_r, || format!("module {k}"));
    }
    for check in [iso, graded, counit, comult, left_counit, right_counit, coassoc] {
        check.finish(&mut report);
    }

    let mut natural = AxiomCheck::new("action map is natural");
    for (k, p) in probes.iter().enumerate() {
        for q in [&probes[k], &probes[(k + 1) % probes.len()]] {
            let Some(g) = random_map(&p.m, &q.m, &mut rng) else {
                natural.skip();
                continue;
            };
            let g_id_cols = (0..p.mc.dim())
                .map(|r| {
                    let (i, j) = p.mc.tensor.representative(r);
                    q.mc.tensor.project_pair(g.column(i), &SparseVec::unit(j, &f))
                })
                .collect();
            let g_id = SparseMatrix::from_columns(&f, q.mc.dim(), g_id_cols);
            let lhs = spec.map(&p.tm, &q.tm, &g).compose(&p.alpha).expect("composable");
            let rhs = q.alpha.compose(&g_id).expect("composable");
            natural.require(lhs == rhs, || format!("map from module {k}"));
        }
    }
    natural.finish(&mut report);
    report.extend(c.report.clone().prefixed("coring"));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_presentation, realize, AlgebraMap, GradedAlgebra};
    use crate::coring::{galois_coring, GaloisExtension};
    use crate::linalg::Field;

    fn along_unit(s: &GradedAlgebra) -> ComonadSpec {
        let k = GradedAlgebra::ground(&s.field);
        ComonadSpec::along(AlgebraMap::from_generator_images(&k, s, &[]).unwrap()).unwrap()
    }

    fn dual_numbers() -> GradedAlgebra {
        realize(&parse_presentation("Q[x]/(x^2)").unwrap(), 4).unwrap()
    }

    #[test]
    fn identity_gives_the_trivial_coring() {
        let s = dual_numbers();
        let spec = ComonadSpec::identity(&s);
        let c = extract_coring(&spec).unwrap();
        assert!(c.report.all_pass());
        assert_eq!(c.coring.dim(), s.dim());
        assert_eq!(c.coring.counit, (0..s.dim()).map(|i| SparseVec::unit(i, &s.field)).collect::<Vec<_>>());
        let m = super::super::module::random_module(&s, 8, &mut ChaCha8Rng::seed_from_u64(1));
        let p = probe(&spec, &c, &m);
        assert_eq!(p.alpha, SparseMatrix::identity(&s.field, m.dim()));
        assert!(verify_watts(&spec, &c, 4, 2).all_pass());
    }

    #[test]
    fn galois_matches_the_galois_coring() {
        let l = Field::gaussian_rationals();
        let g = GaloisExtension::new(&l).unwrap();
        let spec = along_unit(&g.algebra);
        let c = extract_coring(&spec).unwrap();
        let expected = galois_coring(&g);
        assert_eq!(c.coring.left, expected.left);
        assert_eq!(c.coring.right, expected.right);
        assert_eq!(c.coring.counit, expected.counit);
        let sq = expected.square();
        let project = |v: &[SparseVec]| v.iter().map(|x| sq.project(x)).collect::<Vec<_>>();
        assert_eq!(project(&c.coring.comult), project(&expected.comult));
        assert!(c.report.all_pass());
        let report = verify_watts(&spec, &c, 20, 11);
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn dual_numbers_give_a_sweedler_coring() {
        let s = dual_numbers();
        let spec = along_unit(&s);
        let c = extract_coring(&spec).unwrap();
        assert_eq!(c.coring.dim(), 4);
        assert!(c.report.all_pass(), "{:?}", c.report);
        let report = verify_watts(&spec, &c, 3, 7);
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn broken_counit_is_caught() {
        let s = dual_numbers();
        let spec = along_unit(&s);
        let mut c = extract_coring(&spec).unwrap();
        c.coring.counit[0] = c.coring.counit[0].scale(&s.field.from_i64(2), &s.field);
        let report = verify_watts(&spec, &c, 2, 7);
        assert_eq!(report.get("counit transported").unwrap().status, crate::coring::Status::Fail);
    }
}

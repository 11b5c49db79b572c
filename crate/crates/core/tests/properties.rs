//! Property suites, one block per library area.

mod common;

use coringlab::algebra::{elementary_abelian_hopf, parse_presentation, realize, AlgebraMap, GradedAlgebra};
use coringlab::bar::{bar_complex, default_internal_bound, tor_bialgebra, tor_dims_via_resolution_bounded};
use coringlab::comodule::{comodule_tensor, descend_comodule, induce_comodule, phi_dualize, phi_inverse, random_comodule, Comodule};
use coringlab::coring::{exterior_bialgebra, BasisElement, Bialgebra, Convention, DegreeMode, GaloisExtension};
use coringlab::linalg::{homology, intertwiners, Field, SparseMatrix, SparseVec};
use coringlab::stable::{check_comonad, random_ke_module, random_stable_module, shifted_subgroup_coring, stable_hom, ShiftedPoint};
use coringlab::watts::{extract_coring, verify_watts, ChainMap, ComonadSpec};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

fn fields() -> Vec<Field> {
    vec![
        Field::prime(2).unwrap(),
        Field::prime(7).unwrap(),
        Field::rationals(),
        Field::gaussian_rationals(),
        Field::finite(2, &[1, 1, 1]).unwrap(),
    ]
}

fn alg(text: &str, bound: i64) -> GradedAlgebra {
    realize(&parse_presentation(text).unwrap(), bound).unwrap()
}

/// Monomial presentations in one or two variables.
fn presentation() -> impl Strategy<Value = String> {
    let field = prop::sample::select(vec!["Q", "GF(2)", "GF(3)"]);
    let exps = prop::collection::vec(prop::option::of(2u32..4), 1..3);
    (field, exps).prop_map(|(f, exps)| {
        let names = ["x", "y"];
        let vars = names[..exps.len()].join(",");
        let rels: Vec<String> = exps.iter().zip(names).filter_map(|(e, v)| e.map(|e| format!("{v}^{e}"))).collect();
        if rels.is_empty() {
            format!("{f}[{vars}]")
        } else {
            format!("{f}[{vars}]/({})", rels.join(","))
        }
    })
}

fn random_matrix<R: Rng>(f: &Field, rows: usize, cols: usize, rng: &mut R) -> SparseMatrix {
    let mut columns = Vec::with_capacity(cols);
    for _ in 0..cols {
        let mut entries = Vec::new();
        for i in 0..rows {
            if rng.gen_bool(0.6) {
                entries.push((i, f.random(rng)));
            }
        }
        columns.push(SparseVec::from_entries(entries, f));
    }
    SparseMatrix::from_columns(f, rows, columns)
}

fn is_primitive(b: &Bialgebra, x: &SparseVec) -> bool {
    let (f, n) = (&b.field, b.dim());
    b.comult_of(x) == x.tensor(&b.unit, n, f).add(&b.unit.tensor(x, n, f), f)
}

/// Parity of `x` when all of its support shares one parity.
fn parity(b: &Bialgebra, x: &SparseVec) -> Option<u8> {
    let mut ps = x.iter().map(|(i, _)| b.parity(*i));
    let first = ps.next()?;
    ps.all(|p| p == first).then_some(first)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn field_axioms(seed in any::<u64>(), which in 0usize..5) {
        let f = &fields()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        if !f.is_zero(&a) {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        } else {
            prop_assert!(f.inv(&a).is_err());
        }
    }

    #[test]
    fn three_term_euler_characteristic(seed in any::<u64>(), dims in (0usize..6, 0usize..6, 0usize..6), which in 0usize..5) {
        let f = &fields()[which];
        let (c2, c1, c0) = dims;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_matrix(f, c0, c1, &mut rng);
        let kernel = b.kernel();
        let a_cols = (0..c2)
            .map(|_| kernel.iter().fold(SparseVec::new(), |acc, k| acc.add_scaled(&f.random(&mut rng), k, f)))
            .collect();
        let a = SparseMatrix::from_columns(f, c1, a_cols);
        prop_assert!(b.compose(&a).unwrap().is_zero());
        let h2 = homology(&SparseMatrix::zero(f, c2, 0), &a).unwrap().dim();
        let h1 = homology(&a, &b).unwrap().dim();
        let h0 = homology(&b, &SparseMatrix::zero(f, 0, c0)).unwrap().dim();
        prop_assert_eq!(c0 as i64 - c1 as i64 + c2 as i64, h0 as i64 - h1 as i64 + h2 as i64);
    }

    #[test]
    fn realized_algebras_are_algebras(text in presentation(), bound in 2i64..6) {
        let a = alg(&text, bound);
        prop_assert_eq!(a.check(), None);
        let aug = a.augmentation.clone().unwrap();
        let ideal = a.augmentation_ideal().unwrap();
        prop_assert_eq!(ideal.len(), a.dim() - 1);
        let unit = a.unit.leading().unwrap().0;
        for i in (0..a.dim()).filter(|&i| i != unit) {
            prop_assert!(a.field.is_zero(&aug.get(i, &a.field)));
        }
    }

    #[test]
    fn realize_is_stable_under_larger_bounds(text in presentation(), lo in 1i64..4, extra in 1i64..4) {
        let small = alg(&text, lo);
        let big = alg(&text, lo + extra).truncate(lo);
        prop_assert_eq!(&small.space, &big.space);
        prop_assert_eq!(&small.mult, &big.mult);
        prop_assert_eq!(&small.unit, &big.unit);
        prop_assert_eq!(&small.augmentation, &big.augmentation);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn group_algebra_hopf_axioms(p in prop::sample::select(vec![2u64, 3]), r in 1usize..3) {
        let (a, h) = elementary_abelian_hopf(p, r, false).unwrap();
        let b = Bialgebra {
            field: a.field.clone(),
            convention: Convention::Ungraded,
            basis: (0..a.dim()).map(|i| BasisElement::plain(a.label(i))).collect(),
            mult: a.mult.clone(),
            unit: a.unit.clone(),
            comult: h.comult,
            counit: h.counit,
            antipode: Some(h.antipode),
            truncation: None,
        };
        let report = b.check_hopf();
        prop_assert!(report.all_pass(), "{:?}", report.failures());
    }

    #[test]
    fn bar_complex_invariants(text in presentation()) {
        let a = alg(&text, 6);
        let d = default_internal_bound(&a, 3).min(6);
        let bar = bar_complex(&a, 3, d).unwrap();
        prop_assert_eq!(bar.check_d_squared(), None);
        prop_assert_eq!(bar.check_shuffle_leibniz(), None);
        prop_assert_eq!(bar.check_deconcatenation_chain_map(), None);
        for ((s, dd), slice) in bar.slices() {
            prop_assert!(slice.dim() == 0 || dd >= &(*s as i64));
        }
    }

    #[test]
    fn tor_matches_the_resolution(text in presentation()) {
        let a = alg(&text, 8);
        let t = tor_bialgebra(&a, 3).unwrap();
        let res = tor_dims_via_resolution_bounded(&a, 3, t.d_max).unwrap();
        let mut bar = BTreeMap::new();
        for (s, row) in t.table() {
            for (d, c) in row {
                bar.insert((s, d), c);
            }
        }
        prop_assert_eq!(res, bar);
        prop_assert_eq!(t.dims()[0], 1);
        prop_assert_eq!(t.check_graded_commutative(), None);
        let report = t.hopf.check_hopf();
        prop_assert!(report.all_pass(), "{:?}", report.failures());
    }

    #[test]
    fn dual_is_involutive_and_primitives_close(text in presentation(), n in 1usize..4, graded in any::<bool>()) {
        let mode = if graded { DegreeMode::Graded } else { DegreeMode::Ungraded };
        let ext = exterior_bialgebra(n, mode, &Field::prime(3).unwrap());
        let tor = tor_bialgebra(&alg(&text, 6), 3).unwrap().hopf;
        for b in [ext, tor] {
            prop_assert!(b.check_hopf().all_pass());
            if b.truncation.as_ref().is_some_and(|t| !t.complete) {
                prop_assert!(b.dual().is_err());
            } else {
                let dd = b.dual().unwrap().dual().unwrap();
                prop_assert!(dd.same_constants(&b));
            }
            let prims: Vec<_> = b.primitives().into_iter().filter_map(|x| parity(&b, &x).map(|p| (x, p))).collect();
            for (x, px) in &prims {
                for (y, py) in &prims {
                    prop_assert!(is_primitive(&b, &b.graded_commutator(x, *px, y, *py)));
                }
            }
        }
    }

    #[test]
    fn perturbed_bialgebras_fail(seed in any::<u64>(), text in presentation()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = tor_bialgebra(&alg(&text, 6), 3).unwrap().hopf;
        let bad = common::perturb_bialgebra(&b, &mut rng);
        prop_assert!(!bad.check_hopf().all_pass());
        let e = exterior_bialgebra(2, DegreeMode::Graded, &Field::rationals());
        let bad = common::perturb_bialgebra(&e, &mut rng);
        prop_assert!(!bad.check_hopf().all_pass());
    }
}

fn comodule_bialgebras() -> Vec<Bialgebra> {
    vec![
        exterior_bialgebra(2, DegreeMode::Graded, &Field::rationals()),
        exterior_bialgebra(2, DegreeMode::Ungraded, &Field::prime(2).unwrap()),
        tor_bialgebra(&alg("Q[x,y]", 4), 3).unwrap().hopf,
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn monoidal_structure(seed in any::<u64>(), which in 0usize..3) {
        let b = &comodule_bialgebras()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ms: Vec<Comodule> = (0..3).map(|_| random_comodule(b, 4, &mut rng)).collect();
        for m in &ms {
            prop_assert!(m.check().all_pass());
        }
        let unit = Comodule::unit(b);
        prop_assert_eq!(comodule_tensor(&unit, &ms[0], b).unwrap().coaction, ms[0].coaction.clone());
        prop_assert_eq!(comodule_tensor(&ms[0], &unit, b).unwrap().coaction, ms[0].coaction.clone());
        let left = comodule_tensor(&comodule_tensor(&ms[0], &ms[1], b).unwrap(), &ms[2], b).unwrap();
        let right = comodule_tensor(&ms[0], &comodule_tensor(&ms[1], &ms[2], b).unwrap(), b).unwrap();
        prop_assert!(left.check().all_pass());
        prop_assert_eq!(left.coaction, right.coaction);
    }

    #[test]
    fn phi_is_a_functor_and_round_trips(seed in any::<u64>(), which in 0usize..3) {
        let b = &comodule_bialgebras()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m, n) = (random_comodule(b, 4, &mut rng), random_comodule(b, 4, &mut rng));
        let (dm, dn) = (phi_dualize(&m, b).unwrap(), phi_dualize(&n, b).unwrap());
        prop_assert!(dm.check().all_pass());
        prop_assert_eq!(phi_inverse(&dm).unwrap().coaction, m.coaction.clone());
        let maps = m.morphisms(&n).unwrap();
        let pairs: Vec<_> = dm.action.iter().zip(&dn.action).collect();
        prop_assert_eq!(maps.len(), intertwiners(&b.field, m.dim(), n.dim(), &pairs).len());
        let ends = n.morphisms(&n).unwrap();
        for g in &maps {
            for (a, c) in dm.action.iter().zip(&dn.action) {
                prop_assert_eq!(c.compose(g).unwrap(), g.compose(a).unwrap());
            }
            for e in &ends {
                prop_assert!(m.is_morphism(&n, &e.compose(g).unwrap()));
            }
        }
        prop_assert!(m.is_morphism(&m, &SparseMatrix::identity(&b.field, m.dim())));
    }

    #[test]
    fn descent_dimensions(seed in any::<u64>(), gf4 in any::<bool>()) {
        let l = if gf4 { Field::finite(2, &[1, 1, 1]).unwrap() } else { Field::gaussian_rationals() };
        let g = GaloisExtension::new(&l).unwrap();
        let d = exterior_bialgebra(1, DegreeMode::Graded, &g.base);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_comodule(&d, 4, &mut rng);
        let up = induce_comodule(&m, &d, &g).unwrap();
        prop_assert!(up.check().all_pass());
        let down = descend_comodule(&up, &d, &g).unwrap();
        prop_assert_eq!(down.dim() * g.degree(), up.dim());
        prop_assert!(down.check().all_pass());
    }
}

fn nonzero_point<R: Rng>(p: u64, r: usize, rng: &mut R) -> Vec<i64> {
    loop {
        let a: Vec<i64> = (0..r).map(|_| rng.gen_range(0..p as i64)).collect();
        if a.iter().any(|&x| x != 0) {
            return a;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn adjunction_and_comonad(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3]), r in 1usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pt = ShiftedPoint::new(p, r, &nonzero_point(p, r, &mut rng)).unwrap();
        let x = random_ke_module(&pt, 6, &mut rng);
        let n = random_stable_module(p, 4, &mut rng).unwrap();
        let report = pt.check_adjunction(&x, &n);
        prop_assert!(report.all_pass(), "{:?}", report.failures());
        let report = check_comonad(&pt, &n);
        prop_assert!(report.all_pass(), "{:?}", report.failures());
    }

    #[test]
    fn stable_reduction(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_stable_module(p, 8, &mut rng).unwrap();
        let n = random_stable_module(p, 6, &mut rng).unwrap();
        let rm = m.stable_reduce();
        prop_assert!(rm.dim() <= m.dim());
        prop_assert_eq!(rm.stable_reduce(), rm.clone());
        let dim = stable_hom(&m, &n).dim();
        prop_assert_eq!(stable_hom(&rm, &n).dim(), dim);
        prop_assert_eq!(stable_hom(&m, &n.stable_reduce()).dim(), dim);
    }

    #[test]
    fn point_independence_at_two(seed in any::<u64>(), r in 2usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = shifted_subgroup_coring(2, r, &nonzero_point(2, r, &mut rng)).unwrap();
        let b = shifted_subgroup_coring(2, r, &nonzero_point(2, r, &mut rng)).unwrap();
        prop_assert_eq!(a.coring.dim(), 1 << (r - 1));
        prop_assert_eq!(a.coring.dim(), b.coring.dim());
        let prims = |c: &coringlab::stable::StableCoring| c.bialgebra.as_ref().unwrap().primitives().len();
        prop_assert_eq!(prims(&a), r - 1);
        prop_assert_eq!(prims(&a), prims(&b));
    }
}

fn truncated(field: &str, n: u32) -> GradedAlgebra {
    alg(&format!("{field}[x]/(x^{n})"), n as i64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn extracted_corings_pass(seed in any::<u64>(), field in prop::sample::select(vec!["Q", "GF(2)", "GF(3)"]), n in 2u32..4) {
        let s = truncated(field, n);
        let k = GradedAlgebra::ground(&s.field);
        let spec = ComonadSpec::along(AlgebraMap::from_generator_images(&k, &s, &[]).unwrap()).unwrap();
        let c = extract_coring(&spec).unwrap();
        prop_assert!(c.report.all_pass(), "{:?}", c.report.failures());
        prop_assert_eq!(c.coring.dim(), (n * n) as usize);
        let report = verify_watts(&spec, &c, 2, seed);
        prop_assert!(report.all_pass(), "{:?}", report.failures());
    }

    #[test]
    fn composite_specs_pass(seed in any::<u64>(), n in 2u32..4) {
        let big = truncated("GF(2)", n + 1);
        let small = truncated("GF(2)", n);
        let k = GradedAlgebra::ground(&big.field);
        let x = SparseVec::unit(small.generators[0], &small.field);
        let maps = vec![
            ChainMap { from: 0, to: 1, map: AlgebraMap::from_generator_images(&k, &big, &[]).unwrap() },
            ChainMap { from: 1, to: 2, map: AlgebraMap::from_generator_images(&big, &small, &[x]).unwrap() },
        ];
        let spec = ComonadSpec::new(vec![k, big, small], maps, "F2F1U1U2").unwrap();
        let c = extract_coring(&spec).unwrap();
        prop_assert!(c.report.all_pass(), "{:?}", c.report.failures());
        let report = verify_watts(&spec, &c, 2, seed);
        prop_assert!(report.all_pass(), "{:?}", report.failures());
    }
}

//! Acceptance run: every criterion is checked exactly and reported on one
//! line. Structures that pass criteria 1 to 10 are collected and fed to the
//! mutation run of criterion 11.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use coringlab::algebra::{parse_presentation, realize, AlgebraMap, GradedAlgebra};
use coringlab::bar::{tor_bialgebra, tor_dims_via_resolution_bounded};
use coringlab::comodule::{comodule_tensor, descend_comodule, induce_comodule, phi_dualize, phi_inverse, random_comodule, same_coring, Comodule, DualModule};
use coringlab::coring::{coring_tensor, exterior_bialgebra, galois_coring, Bialgebra, Coring, DegreeMode, GaloisExtension};
use coringlab::linalg::{Field, SparseMatrix, SparseVec};
use coringlab::stable::{
    certify_exterior, check_comonad_maps, comonad_maps, comonad_object_blocks, shifted_subgroup_coring, stable_endomorphism_algebra, ComonadMaps, ShiftedPoint, StableModule,
};
use coringlab::watts::{extract_coring, verify_watts, ComonadSpec, ExtractedCoring};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0;
const MUTATIONS_PER_STRUCTURE: usize = 5;

/// A structure that passed its checks, kept for the mutation run.
enum Subject {
    Hopf(Bialgebra),
    Coring(Coring),
    Comodule(Comodule),
    Dual(DualModule),
    Algebra(GradedAlgebra),
    /// A `p = 2` bialgebra and the rank `r` it is certified against; its
    /// coring is the underlying coalgebra.
    Exterior(Bialgebra, usize),
    Comonad(ShiftedPoint, StableModule, ComonadMaps),
    Extracted(ComonadSpec, ExtractedCoring),
}

impl Subject {
    /// Whether a seeded single-constant perturbation is caught.
    fn perturbation_fails<R: Rng>(&self, rng: &mut R) -> bool {
        match self {
            Subject::Hopf(b) => !common::perturb_bialgebra(b, rng).check_hopf().all_pass(),
            Subject::Coring(c) => !common::perturb_coring(c, rng).check().all_pass(),
            Subject::Comodule(m) => !common::perturb_comodule(m, rng).check().all_pass(),
            Subject::Dual(d) => !common::perturb_dual_module(d, rng).check().all_pass(),
            Subject::Algebra(a) => common::perturb_algebra(a, rng).check().is_some(),
            Subject::Exterior(b, r) => {
                let bad = common::perturb_bialgebra(b, rng);
                !(bad.coring().check().all_pass() && bad.check_hopf().all_pass() && certify_exterior(&bad, *r).all_pass())
            }
            Subject::Comonad(pt, n, maps) => {
                let mut bad = maps.clone();
                let f = n.field.clone();
                if rng.gen_bool(0.5) {
                    common::bump_matrix(std::slice::from_mut(&mut bad.counit), &f, rng);
                } else {
                    common::bump_matrix(std::slice::from_mut(&mut bad.comult), &f, rng);
                }
                !check_comonad_maps(pt, n, &bad).all_pass()
            }
            Subject::Extracted(spec, c) => {
                let mut bad = c.clone();
                bad.coring = common::perturb_coring(&c.coring, rng);
                !bad.coring.check().all_pass() || !verify_watts(spec, &bad, 2, SEED).all_pass()
            }
        }
    }
}

struct Run {
    subjects: Vec<(String, Subject)>,
    problems: Vec<String>,
}

impl Run {
    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.problems.push(what());
        }
    }

    fn keep(&mut self, label: impl Into<String>, s: Subject) {
        self.subjects.push((label.into(), s));
    }
}

fn alg(text: &str, bound: i64) -> GradedAlgebra {
    realize(&parse_presentation(text).unwrap(), bound).unwrap()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn polynomial_ring(field: &str, n: usize) -> String {
    format!("{field}[{}]", ["x", "y", "z"][..n].join(","))
}

/// Rank of the span of `vs`.
fn span_rank(f: &Field, dim: usize, vs: Vec<SparseVec>) -> usize {
    SparseMatrix::from_columns(f, dim, vs).rank()
}

/// Products over all subsets of `gens`, in increasing index order.
fn subset_products(b: &Bialgebra, gens: &[SparseVec]) -> Vec<SparseVec> {
    (0..1usize << gens.len())
        .map(|mask| (0..gens.len()).filter(|i| mask >> i & 1 == 1).fold(b.unit.clone(), |acc, i| b.mul(&acc, &gens[i])))
        .collect()
}

fn c1(run: &mut Run) {
    for field in ["Q", "GF(2)"] {
        for n in 1..=3 {
            let text = polynomial_ring(field, n);
            let t = tor_bialgebra(&alg(&text, 5), 5).unwrap();
            let expected: Vec<usize> = (0..=5).map(|i| binomial(n, i)).collect();
            run.require(t.dims() == expected, || format!("{text}: dims {:?} ≠ {expected:?}", t.dims()));
            let report = t.hopf.check_hopf();
            run.require(report.all_pass(), || format!("{text}: {:?}", report.failures()));
            let d = match t.hopf.dual() {
                Ok(d) => d,
                Err(e) => return run.require(false, || format!("{text}: dual failed: {e}")),
            };
            let f = &d.field;
            let gens: Vec<SparseVec> = t.in_bidegree(1, 1).into_iter().map(|i| SparseVec::unit(i, f)).collect();
            run.require(gens.len() == n, || format!("{text}: {} degree-one generators", gens.len()));
            for x in &gens {
                run.require(d.mul(x, x).is_zero(), || format!("{text}: a generator does not square to zero"));
                for y in &gens {
                    run.require(d.mul(x, y).add(&d.mul(y, x), f).is_zero(), || format!("{text}: generators do not anticommute"));
                }
            }
            run.require(span_rank(f, d.dim(), subset_products(&d, &gens)) == 1 << n, || format!("{text}: products of generators are not a basis of the dual"));
            run.require(d.dim() == 1 << n, || format!("{text}: dual has dimension {}", d.dim()));
            let report = d.check_hopf();
            run.require(report.all_pass(), || format!("{text} dual: {:?}", report.failures()));
            if n == 2 {
                run.keep(format!("Tor {text}"), Subject::Hopf(t.hopf.clone()));
                run.keep(format!("dual Tor {text}"), Subject::Hopf(d));
            }
        }
    }
}

fn c2(run: &mut Run) {
    let t = tor_bialgebra(&alg("Q[x]", 5), 5).unwrap();
    let h = &t.hopf;
    let f = &h.field;
    run.require(t.dims() == vec![1, 1, 0, 0, 0, 0], || format!("dims {:?}", t.dims()));
    let tau = t.in_bidegree(1, 1);
    run.require(tau.len() == 1, || format!("{} classes in bidegree (1,1)", tau.len()));
    let Some(&tau) = tau.first() else { return };
    let tau_v = SparseVec::unit(tau, f);
    let n = h.dim();
    let expected = tau_v.tensor(&h.unit, n, f).add(&h.unit.tensor(&tau_v, n, f), f);
    run.require(h.comult[tau] == expected, || "Δ(τ) ≠ τ⊗1 + 1⊗τ".into());
    run.require(h.mul_basis(tau, tau).is_zero(), || "τ² ≠ 0".into());
    let prims = h.primitives();
    run.require(prims.len() == 1 && span_rank(f, n, vec![prims[0].clone(), tau_v.clone()]) == 1, || "primitives are not spanned by τ".into());
    run.require(span_rank(f, n, vec![h.unit.clone(), tau_v]) == n, || "1 and τ do not span".into());
    let report = h.check_hopf();
    run.require(report.all_pass(), || format!("{:?}", report.failures()));
    run.keep("Tor Q[x]", Subject::Hopf(h.clone()));
}

fn c3(run: &mut Run) {
    for text in ["Q[x]", "GF(2)[x]/(x^2)", "GF(3)[x]/(x^3)", "GF(2)[x,y]/(x^2,y^2)", "Q[x,y]"] {
        let a = alg(text, 12);
        let t = tor_bialgebra(&a, 6).unwrap();
        let res = tor_dims_via_resolution_bounded(&a, 6, t.d_max).unwrap();
        let bar: BTreeMap<(usize, i64), usize> = t.table().into_iter().flat_map(|(s, row)| row.into_iter().map(move |(d, c)| ((s, d), c))).collect();
        run.require(res == bar, || format!("{text}: resolution {res:?} ≠ bar {bar:?}"));
        let report = t.hopf.check_hopf();
        run.require(report.all_pass(), || format!("{text}: {:?}", report.failures()));
        run.keep(format!("Tor {text} to degree 6"), Subject::Hopf(t.hopf));
    }
}

fn nonzero_points(p: u64, r: usize) -> Vec<Vec<i64>> {
    (1..(p as usize).pow(r as u32)).map(|mut x| (0..r).map(|_| { let d = (x % p as usize) as i64; x /= p as usize; d }).collect()).collect()
}

fn c4(run: &mut Run) {
    let f = Field::prime(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for r in 1..=4 {
        let mut points = nonzero_points(2, r);
        if r == 4 {
            points.shuffle(&mut rng);
            points.truncate(10);
        }
        for point in points {
            let sc = shifted_subgroup_coring(2, r, &point).unwrap();
            let label = format!("r = {r}, point {point:?}");
            run.require(sc.report.all_pass(), || format!("{label}: {:?}", sc.report.failures()));
            run.require(sc.coring.dim() == 1 << (r - 1), || format!("{label}: dimension {}", sc.coring.dim()));
            let Some(b) = &sc.bialgebra else {
                run.require(false, || format!("{label}: no bialgebra"));
                continue;
            };
            let prims = b.primitives();
            run.require(prims.len() == r - 1, || format!("{label}: {} primitives", prims.len()));
            for x in &prims {
                run.require(b.mul(x, x).is_zero(), || format!("{label}: a primitive does not square to zero"));
                for y in &prims {
                    run.require(b.mul(x, y) == b.mul(y, x), || format!("{label}: primitives do not commute"));
                }
            }
            run.require(span_rank(&f, b.dim(), subset_products(b, &prims)) == b.dim(), || format!("{label}: products of primitives are not a basis"));
            let cert = certify_exterior(b, r);
            run.require(cert.all_pass(), || format!("{label}: {:?}", cert.failures()));
            let under = b.coring();
            run.require(sc.coring.base.dim() == 1 && under.comult == sc.coring.comult && under.counit == sc.coring.counit, || {
                format!("{label}: the coring is not the coalgebra of the bialgebra")
            });
            if r == 3 && point == [1, 0, 1] || r == 4 {
                run.keep(format!("C(Π) {label}"), Subject::Exterior(b.clone(), r));
            }
        }
    }
}

/// `dim Hom(k[t]/tⁱ, k[t]/tʲ) − dim(maps through k[t]/tᵖ)`, summed over
/// the summands.
fn stable_end_dim(p: usize) -> usize {
    (1..p).flat_map(|i| (1..p).map(move |j| i.min(j) - (i + j).saturating_sub(p))).sum()
}

fn c5(run: &mut Run) {
    for p in [2u64, 3, 5] {
        let e = stable_endomorphism_algebra(p).unwrap();
        let a = &e.algebra;
        let f = &a.field;
        run.require(e.report.all_pass(), || format!("p = {p}: {:?}", e.report.failures()));
        run.require(a.check().is_none(), || format!("p = {p}: {:?}", a.check()));
        run.require(a.dim() == e.quiver.dim(), || format!("p = {p}: {} ≠ quiver {}", a.dim(), e.quiver.dim()));
        run.require(a.dim() == stable_end_dim(p as usize), || format!("p = {p}: dimension {} ≠ {}", a.dim(), stable_end_dim(p as usize)));
        if p == 2 {
            run.require(a.dim() == 1 && a.unit == SparseVec::unit(0, f), || "Π is not the ground field".into());
        }
        let arrow = |name: String| a.index_of(&name).map(|i| SparseVec::unit(i, f));
        let m = p as usize - 2;
        if m >= 1 {
            match (arrow("a1".into()), arrow("b1".into()), arrow(format!("a{m}")), arrow(format!("b{m}"))) {
                (Some(a1), Some(b1), Some(am), Some(bm)) => {
                    run.require(a.mul(&a1, &b1).is_zero(), || format!("p = {p}: β1α1 ≠ 0"));
                    run.require(a.mul(&bm, &am).is_zero(), || format!("p = {p}: α{m}β{m} ≠ 0"));
                }
                _ => run.require(false, || format!("p = {p}: arrows missing from the basis")),
            }
        }
        for i in 1..m {
            match (arrow(format!("a{i}")), arrow(format!("b{i}")), arrow(format!("a{}", i + 1)), arrow(format!("b{}", i + 1))) {
                (Some(ai), Some(bi), Some(aj), Some(bj)) => {
                    run.require(a.mul(&bi, &ai) == a.mul(&aj, &bj), || format!("p = {p}: α{i}β{i} ≠ β{0}α{0}", i + 1));
                }
                _ => run.require(false, || format!("p = {p}: arrows missing from the basis")),
            }
        }
        run.keep(format!("Π for p = {p}"), Subject::Algebra(a.clone()));
    }
}

/// Jordan type of a nilpotent operator from the ranks of its powers.
fn jordan_type(t: &SparseMatrix) -> Vec<usize> {
    let n = t.rows();
    let mut ranks = vec![n];
    let mut power = SparseMatrix::identity(t.field(), n);
    while *ranks.last().unwrap() > 0 {
        power = t.compose(&power).unwrap();
        ranks.push(power.rank());
    }
    let at_least = |k: usize| ranks[k - 1] - ranks[k];
    let mut sizes = Vec::new();
    for k in 1..ranks.len() {
        let longer = if k + 1 < ranks.len() { at_least(k + 1) } else { 0 };
        sizes.extend(std::iter::repeat_n(k, at_least(k) - longer));
    }
    sizes
}

fn c6(run: &mut Run) {
    for (p, r) in [(3u64, 2usize), (3, 3), (5, 2)] {
        let mut expected: Vec<usize> = (1..p as usize).flat_map(|i| std::iter::repeat_n(i, (p as usize).pow(r as u32 - 1))).collect();
        expected.sort();
        let m = StableModule::from_blocks(p, &(1..p as usize).collect::<Vec<_>>()).unwrap();
        for point in [[1i64].iter().chain(&vec![0; r - 1]).copied().collect::<Vec<_>>(), vec![1; r]] {
            let pt = ShiftedPoint::new(p, r, &point).unwrap();
            let mut got = jordan_type(&pt.comonad(&m).t);
            got.sort();
            run.require(got == expected, || format!("p = {p}, r = {r}, point {point:?}: {got:?}"));
            let mut lib = comonad_object_blocks(p, r, &point).unwrap();
            lib.sort();
            run.require(lib == expected, || format!("p = {p}, r = {r}, point {point:?}: library blocks {lib:?}"));
        }
        if r == 2 {
            let n = if p == 3 { m.clone() } else { StableModule::cyclic(p, 1).unwrap() };
            let pt = ShiftedPoint::new(p, r, &[1, 1]).unwrap();
            let maps = comonad_maps(&pt, &n);
            let report = check_comonad_maps(&pt, &n, &maps);
            run.require(report.all_pass(), || format!("p = {p}: {:?}", report.failures()));
            run.keep(format!("comonad at p = {p}"), Subject::Comonad(pt, n, maps));
        }
    }
}

fn c7(run: &mut Run) {
    let extensions = [Field::gaussian_rationals(), Field::finite(2, &[1, 1, 1]).unwrap()];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for l in &extensions {
        let g = GaloisExtension::new(l).unwrap();
        let c = galois_coring(&g);
        let report = c.check();
        run.require(report.all_pass(), || format!("{l}: {:?}", report.failures()));
        let d = g.degree();
        let theta = l.generator().unwrap();
        let power = |a: usize| l.pow(&theta, a as u64);
        let sq = c.square();
        let pure = |a: usize, b: usize| SparseVec::unit(a * d + b, &g.base);
        for a in 0..d {
            for b in 0..d {
                let i = a * d + b;
                let eps = GradedAlgebra::extension_coords(l, &l.mul(&power(a), &power(b)));
                run.require(c.counit[i] == eps, || format!("{l}: ε(θ^{a}⊗θ^{b}) ≠ θ^{a}θ^{b}"));
                let delta = sq.project_pair(&pure(a, 0), &pure(0, b));
                run.require(sq.project(&c.comult[i]) == delta, || format!("{l}: Δ(θ^{a}⊗θ^{b}) ≠ (θ^{a}⊗1)⊗(1⊗θ^{b})"));
            }
        }
        run.keep(format!("Galois coring over {l}"), Subject::Coring(c));

        let ext = exterior_bialgebra(1, DegreeMode::Graded, &g.base);
        let t = coring_tensor(&ext, &g).unwrap();
        let report = t.check();
        run.require(report.all_pass(), || format!("{l} tensor coring: {:?}", report.failures()));
        run.keep(format!("tensor coring over {l}"), Subject::Coring(t));

        for k in 0..20 {
            let m = random_comodule(&ext, 5, &mut rng);
            let up = induce_comodule(&m, &ext, &g).unwrap();
            let down = descend_comodule(&up, &ext, &g).unwrap();
            run.require(down == m, || format!("{l}: descend∘induce differs on comodule {k}"));
            run.require(down.dim() * d == up.dim(), || format!("{l}: {}·{d} ≠ {}", down.dim(), up.dim()));
            run.require(up.check().all_pass() && down.check().all_pass(), || format!("{l}: comodule {k} fails its axioms"));
            if k == 0 {
                run.keep(format!("induced comodule over {l}"), Subject::Comodule(up));
            }
        }
    }
}

fn small_coalgebras() -> Vec<(String, Bialgebra)> {
    let q = Field::rationals();
    let two = Field::prime(2).unwrap();
    vec![
        ("Λ(1) over Q".into(), exterior_bialgebra(1, DegreeMode::Graded, &q)),
        ("Λ(2) over Q".into(), exterior_bialgebra(2, DegreeMode::Graded, &q)),
        ("Λ(3) over Q".into(), exterior_bialgebra(3, DegreeMode::Graded, &q)),
        ("Λ(3) over GF(2), ungraded".into(), exterior_bialgebra(3, DegreeMode::Ungraded, &two)),
        ("Tor Q[x,y]".into(), tor_bialgebra(&alg("Q[x,y]", 4), 3).unwrap().hopf),
        ("Tor GF(3)[x,y,z]".into(), tor_bialgebra(&alg("GF(3)[x,y,z]", 4), 4).unwrap().hopf),
    ]
}

fn c8(run: &mut Run) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for (name, b) in small_coalgebras() {
        run.require(b.dim() <= 8, || format!("{name}: dimension {}", b.dim()));
        match b.dual().and_then(|d| d.dual()) {
            Ok(dd) => run.require(dd.same_constants(&b), || format!("{name}: double dual differs")),
            Err(e) => run.require(false, || format!("{name}: {e}")),
        }
        for k in 0..5 {
            let m = random_comodule(&b, 6, &mut rng);
            run.require(m.dim() <= 6, || format!("{name}: comodule of dimension {}", m.dim()));
            let d = phi_dualize(&m, &b).unwrap();
            run.require(d.check().all_pass(), || format!("{name}: Φ(M{k}) is not a module"));
            let back = phi_inverse(&d).unwrap();
            run.require(same_coring(&back.coring, &m.coring) && back.coaction == m.coaction && back.basis == m.basis, || format!("{name}: Φ⁻¹Φ(M{k}) ≠ M{k}"));
            if k == 0 {
                run.keep(format!("Φ(M) over {name}"), Subject::Dual(d));
                run.keep(format!("comodule over {name}"), Subject::Comodule(m));
            }
        }
    }
}

fn c9(run: &mut Run) {
    let q = Field::rationals();
    let dual_numbers = alg("Q[x]/(x^2)", 4);
    let along = |s: &GradedAlgebra| ComonadSpec::along(AlgebraMap::from_generator_images(&GradedAlgebra::ground(&s.field), s, &[]).unwrap()).unwrap();
    let gauss = GaloisExtension::new(&Field::gaussian_rationals()).unwrap();
    let specs = [
        ("identity on Q[x]/(x^2)", ComonadSpec::identity(&dual_numbers)),
        ("Q ⊂ Q(i)", along(&gauss.algebra)),
        ("Q → Q[x]/(x^2)", along(&dual_numbers)),
    ];
    let _ = q;
    for (name, spec) in specs {
        let c = extract_coring(&spec).unwrap();
        run.require(c.report.all_pass(), || format!("{name}: {:?}", c.report.failures()));
        let report = verify_watts(&spec, &c, 20, SEED);
        run.require(report.all_pass(), || format!("{name}: {:?}", report.failures()));
        for axiom in ["action map is an isomorphism", "action map is natural", "counit transported", "comultiplication transported", "coassociativity"] {
            run.require(report.get(axiom).is_some(), || format!("{name}: no \"{axiom}\" line"));
        }
        run.keep(format!("extracted coring for {name}"), Subject::Extracted(spec, c));
    }
}

fn c10(run: &mut Run) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let q = Field::rationals();
    let bialgebras = [
        ("Λ(2) over Q", exterior_bialgebra(2, DegreeMode::Graded, &q)),
        ("Λ(2) over GF(2), ungraded", exterior_bialgebra(2, DegreeMode::Ungraded, &Field::prime(2).unwrap())),
        ("Tor Q[x,y]", tor_bialgebra(&alg("Q[x,y]", 4), 3).unwrap().hopf),
        ("Tor GF(2)[x]", tor_bialgebra(&alg("GF(2)[x]", 4), 3).unwrap().hopf),
    ];
    for (name, b) in bialgebras {
        let unit = Comodule::unit(&b);
        for k in 0..10 {
            let ms: Vec<Comodule> = (0..3).map(|_| random_comodule(&b, 4, &mut rng)).collect();
            let pair = comodule_tensor(&ms[0], &ms[1], &b).unwrap();
            run.require(pair.check().all_pass(), || format!("{name}: M⊗N fails its axioms in case {k}"));
            for m in &ms {
                let l = comodule_tensor(&unit, m, &b).unwrap();
                let r = comodule_tensor(m, &unit, &b).unwrap();
                run.require(l.coaction == m.coaction && r.coaction == m.coaction, || format!("{name}: unit is not neutral in case {k}"));
            }
            let left = comodule_tensor(&pair, &ms[2], &b).unwrap();
            let right = comodule_tensor(&ms[0], &comodule_tensor(&ms[1], &ms[2], &b).unwrap(), &b).unwrap();
            run.require(left.coaction == right.coaction, || format!("{name}: associativity fails in case {k}"));
            run.require(left.check().all_pass(), || format!("{name}: triple product fails its axioms in case {k}"));
            if k == 0 {
                run.keep(format!("M⊗N over {name}"), Subject::Comodule(pair));
            }
        }
    }
}

fn c11(subjects: &[(String, Subject)], problems: &mut Vec<String>) -> usize {
    let mut caught = 0;
    for (i, (label, s)) in subjects.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + i as u64);
        for k in 0..MUTATIONS_PER_STRUCTURE {
            if s.perturbation_fails(&mut rng) {
                caught += 1;
            } else {
                problems.push(format!("{label}: perturbation {k} passed every check"));
            }
        }
    }
    caught
}

fn main() {
    let criteria: [(&str, fn(&mut Run), u64); 10] = [
        ("regular-case Tor", c1, 30),
        ("the τ case", c2, 5),
        ("oracle equivalence", c3, 120),
        ("p = 2 shifted subgroups", c4, 120),
        ("preprojective algebra", c5, 60),
        ("odd-p object dimensions", c6, 120),
        ("Galois and descent", c7, 60),
        ("duality Φ", c8, 60),
        ("Eilenberg–Watts", c9, 60),
        ("monoidal comodules", c10, 60),
    ];
    let mut subjects = Vec::new();
    let mut all = true;
    let mut line = |n: usize, name: &str, elapsed: Duration, limit: u64, problems: &[String]| {
        let in_time = elapsed <= Duration::from_secs(limit);
        let ok = problems.is_empty() && in_time;
        all &= ok;
        println!("criterion {n}: {} ({name}, {:.2}s of {limit}s)", if ok { "PASS" } else { "FAIL" }, elapsed.as_secs_f64());
        for p in problems.iter().take(10) {
            println!("    {p}");
        }
        if !in_time {
            println!("    over the time limit");
        }
    };
    for (n, (name, f, limit)) in criteria.iter().enumerate() {
        let mut run = Run { subjects: Vec::new(), problems: Vec::new() };
        let start = Instant::now();
        f(&mut run);
        let elapsed = start.elapsed();
        line(n + 1, name, elapsed, *limit, &run.problems);
        if run.problems.is_empty() {
            subjects.extend(run.subjects);
        }
    }
    let mut problems = Vec::new();
    let start = Instant::now();
    let caught = c11(&subjects, &mut problems);
    let name = format!("mutation suite, {caught} of {} perturbations over {} structures caught", subjects.len() * MUTATIONS_PER_STRUCTURE, subjects.len());
    line(11, &name, start.elapsed(), 120, &problems);
    if !all {
        std::process::exit(1);
    }
}

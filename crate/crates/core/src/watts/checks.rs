use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coring::{AxiomCheck, Report};
use crate::linalg::{SparseMatrix, SparseVec};

use super::extract::random_map;
use super::module::{battery, RightModule};
use super::spec::ComonadSpec;

/// `T(M(1)) = T(M)(1)` on a seeded battery, together with the counit and
/// comultiplication, under the identification of both with the same
/// quotient of `M ⊗_k S`.
pub fn grading_shift_check(spec: &ComonadSpec, battery_size: usize, seed: u64) -> Report {
    let mut report = Report::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut object = AxiomCheck::new("commutes with the shift");
    let mut maps = AxiomCheck::new("counit and comultiplication commute with the shift");
    for (k, m) in battery(spec.target(), battery_size, &mut rng).iter().enumerate() {
        let (tm, tm1) = (spec.evaluate(m), spec.evaluate(&m.shift(1)));
        object.require(tm1.module == tm.module.shift(1), || format!("module {k}"));
        let (ttm, ttm1) = (spec.evaluate(&tm.module), spec.evaluate(&tm1.module));
        let same = spec.counit(m, &tm) == spec.counit(&m.shift(1), &tm1) && spec.comult(&tm, &ttm) == spec.comult(&tm1, &ttm1);
        maps.require(same, || format!("module {k}"));
    }
    object.finish(&mut report);
    maps.finish(&mut report);
    report
}

/// The functor a transformation out of `T` lands in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Codomain {
    Identity,
    Comonad,
}

/// A transformation `T ⇒ Id` or `T ⇒ T`, given by its components.
pub struct Transformation<'a> {
    pub name: String,
    pub codomain: Codomain,
    component: Box<dyn Fn(&RightModule) -> SparseMatrix + 'a>,
}

impl<'a> Transformation<'a> {
    pub fn new(name: &str, codomain: Codomain, component: impl Fn(&RightModule) -> SparseMatrix + 'a) -> Self {
        Transformation { name: name.into(), codomain, component: Box::new(component) }
    }

    pub fn at(&self, m: &RightModule) -> SparseMatrix {
        (self.component)(m)
    }

    pub fn identity(spec: &'a ComonadSpec) -> Self {
        Transformation::new("identity", Codomain::Comonad, move |m| SparseMatrix::identity(spec.field(), spec.evaluate(m).dim()))
    }

    pub fn counit(spec: &'a ComonadSpec) -> Self {
        Transformation::new("counit", Codomain::Identity, move |m| spec.counit(m, &spec.evaluate(m)))
    }

    pub fn scaled_counit(spec: &'a ComonadSpec, c: i64) -> Self {
        let f = spec.field().clone();
        Transformation::new(&format!("{c}·counit"), Codomain::Identity, move |m| spec.counit(m, &spec.evaluate(m)).scale(&f.from_i64(c)))
    }

    /// The transformation determined by the component of `base` at `S`:
    /// additively on a free cover `π: F → M`, then pushed down along the
    /// surjection `T(π)`.
    pub fn rebuilt_from_regular(spec: &'a ComonadSpec, base: &Transformation<'_>) -> Self {
        let s = spec.target();
        let at_s = base.at(&RightModule::regular(s));
        let codomain = base.codomain;
        Transformation::new(&format!("{} rebuilt from S", base.name), codomain, move |m| rebuild(spec, &at_s, codomain, m))
    }
}

fn block(spec: &ComonadSpec, at_s: &SparseMatrix, codomain: Codomain, free: &RightModule, gens: usize) -> SparseMatrix {
    let s = spec.target();
    let f = spec.field();
    let d = s.dim();
    let reg = RightModule::regular(s);
    let (ts, tf) = (spec.evaluate(&reg), spec.evaluate(free));
    let target_dim = match codomain {
        Codomain::Identity => free.dim(),
        Codomain::Comonad => tf.dim(),
    };
    let mut out = SparseMatrix::zero(f, target_dim, tf.dim());
    for i in 0..gens {
        let incl = SparseMatrix::from_columns(f, free.dim(), (0..d).map(|t| SparseVec::unit(i * d + t, f)).collect());
        let proj = SparseMatrix::from_columns(f, d, (0..free.dim()).map(|c| if c / d == i { SparseVec::unit(c % d, f) } else { SparseVec::new() }).collect());
        let up = match codomain {
            Codomain::Identity => incl,
            Codomain::Comonad => spec.map(&ts, &tf, &incl),
        };
        let piece = up.compose(at_s).and_then(|x| x.compose(&spec.map(&tf, &ts, &proj))).expect("composable");
        out = out.add(&piece).expect("same shape");
    }
    out
}

fn rebuild(spec: &ComonadSpec, at_s: &SparseMatrix, codomain: Codomain, m: &RightModule) -> SparseMatrix {
    let s = spec.target();
    let f = spec.field();
    let d = s.dim();
    let free = RightModule::free(s, &m.degrees);
    let pi = SparseMatrix::from_columns(f, m.dim(), (0..free.dim()).map(|c| m.action[c % d].column(c / d).clone()).collect());
    let (tf, tm) = (spec.evaluate(&free), spec.evaluate(m));
    let t_pi = spec.map(&tf, &tm, &pi);
    let at_free = block(spec, at_s, codomain, &free, m.dim());
    let down = match codomain {
        Codomain::Identity => pi,
        Codomain::Comonad => t_pi.clone(),
    };
    let pushed = down.compose(&at_free).expect("composable");
    let rows = pushed.rows();
    let cols = (0..tm.dim())
        .map(|q| {
            let pre = t_pi.solve(&SparseVec::unit(q, f)).expect("T preserves surjections");
            pushed.apply(&pre)
        })
        .collect();
    SparseMatrix::from_columns(f, rows, cols)
}

/// Checks on a seeded battery that two transformations out of `T` are
/// natural, and that they agree everywhere exactly when they agree at `S`.
pub fn determination_at_regular(spec: &ComonadSpec, t1: &Transformation<'_>, t2: &Transformation<'_>, battery_size: usize, seed: u64) -> Report {
    let mut report = Report::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = spec.target();
    let mut modules = vec![RightModule::regular(s)];
    modules.extend(battery(s, battery_size, &mut rng));
    let mut same_codomain = AxiomCheck::new("same codomain");
    same_codomain.require(t1.codomain == t2.codomain, || format!("{:?} vs {:?}", t1.codomain, t2.codomain));
    same_codomain.finish(&mut report);
    if t1.codomain != t2.codomain {
        return report;
    }
    let evaluated: Vec<_> = modules.iter().map(|m| spec.evaluate(m)).collect();
    for t in [t1, t2] {
        let mut natural = AxiomCheck::new(&format!("{} is natural", t.name));
        for k in 0..modules.len() {
            let l = (k + 1) % modules.len();
            for j in [k, l] {
                let Some(g) = random_map(&modules[k], &modules[j], &mut rng) else {
                    natural.skip();
                    continue;
                };
                let t_g = spec.map(&evaluated[k], &evaluated[j], &g);
                let after = match t.codomain {
                    Codomain::Identity => g.clone(),
                    Codomain::Comonad => t_g.clone(),
                };
                let lhs = after.compose(&t.at(&modules[k])).expect("composable");
                let rhs = t.at(&modules[j]).compose(&t_g).expect("composable");
                natural.require(lhs == rhs, || format!("map {k} → {j}"));
            }
        }
        natural.finish(&mut report);
    }
    let components: Vec<_> = modules.iter().map(|m| (t1.at(m), t2.at(m))).collect();
    let at_regular = components[0].0 == components[0].1;
    let mut regular = AxiomCheck::new("agree at S");
    regular.require(at_regular, || "components at S differ".into());
    regular.finish(&mut report);
    if at_regular {
        let mut everywhere = AxiomCheck::new("agree on every battery module");
        for (k, (a, b)) in components.iter().enumerate().skip(1) {
            everywhere.require(a == b, || format!("module {k}"));
        }
        everywhere.finish(&mut report);
    } else {
        let mut nowhere = AxiomCheck::new("disagree on every battery module with nonzero image");
        for (k, (a, b)) in components.iter().enumerate().skip(1) {
            if a.is_zero() && b.is_zero() {
                nowhere.skip();
            } else {
                nowhere.require(a != b, || format!("module {k}"));
            }
        }
        nowhere.finish(&mut report);
    }
    report
}

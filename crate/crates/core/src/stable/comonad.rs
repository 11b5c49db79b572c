use crate::coring::{AxiomCheck, Report};
use crate::linalg::SparseMatrix;

use super::hom::stable_hom;
use super::module::StableModule;
use super::point::ShiftedPoint;

/// Components at `N` of the comonad `C = φ_*φ^!`.
#[derive(Clone, Debug)]
pub struct ComonadMaps {
    /// `C(N)` as a `kC`-module.
    pub object: StableModule,
    /// `ε_N: C(N) → N`.
    pub counit: SparseMatrix,
    /// `δ_N = φ_*(η_{φ^!N}): C(N) → C(C(N))`.
    pub comult: SparseMatrix,
}

pub fn comonad_maps(point: &ShiftedPoint, n: &StableModule) -> ComonadMaps {
    let coind = point.coinduce(n);
    ComonadMaps { object: point.restrict(&coind), counit: point.counit(n), comult: point.unit(&coind) }
}

/// Comonad axioms at `N`, on the nose and in the stable category.
pub fn check_comonad(point: &ShiftedPoint, n: &StableModule) -> Report {
    check_comonad_maps(point, n, &comonad_maps(point, n))
}

/// The axioms of [`check_comonad`] for given components at `N`; the
/// components at `C(N)` are recomputed.
pub fn check_comonad_maps(point: &ShiftedPoint, n: &StableModule, maps: &ComonadMaps) -> Report {
    let mut report = Report::new();
    let c = &maps.object;
    let cc = point.comonad(c);
    let ccc = point.comonad(&cc);
    let id = SparseMatrix::identity(&n.field, c.dim());
    let linear = |name: &str, a: &StableModule, b: &StableModule, g: &SparseMatrix, report: &mut Report| {
        let mut check = AxiomCheck::new(name);
        check.require(b.t.compose(g).ok() == g.compose(&a.t).ok(), || "t does not commute with the map".into());
        check.finish(report);
    };
    linear("counit is kC-linear", c, n, &maps.counit, &mut report);
    linear("comultiplication is kC-linear", c, &cc, &maps.comult, &mut report);

    let left = point.counit(c).compose(&maps.comult).expect("composable");
    let right = point.coinduce_map(&maps.counit).compose(&maps.comult).expect("composable");
    let delta_c = comonad_maps(point, c).comult;
    let co_l = point.coinduce_map(&maps.comult).compose(&maps.comult).expect("composable");
    let co_r = delta_c.compose(&maps.comult).expect("composable");
    let laws = [
        ("left counit law", left, id.clone(), c, c),
        ("right counit law", right, id, c, c),
        ("coassociativity", co_l, co_r, c, &ccc),
    ];
    for (name, lhs, rhs, src, tgt) in &laws {
        let mut exact = AxiomCheck::new(name);
        exact.require(lhs == rhs, || "maps differ".into());
        exact.finish(&mut report);
        let mut stable = AxiomCheck::new(&format!("{name} (stable)"));
        let s = stable_hom(src, tgt);
        let diff = lhs.sub(rhs).expect("same shape");
        stable.require(s.coords(&diff).is_some_and(|v| v.is_zero()), || "difference is stably nonzero".into());
        stable.finish(&mut report);
    }
    report
}

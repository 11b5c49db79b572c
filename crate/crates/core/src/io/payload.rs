//! Envelope payloads and the checks that certify them. A payload's report
//! is a function of the payload alone, so re-checking a saved file
//! reproduces the report written with it.

use serde::{Deserialize, Serialize};

use crate::comodule::{descend_comodule, induce_comodule, Comodule};
use crate::coring::{AxiomCheck, Bialgebra, Convention, GaloisExtension, Report};
use crate::error::Result;
use crate::stable::{certify_exterior, shifted_subgroup_coring, stable_endomorphism_algebra, StableCoring};
use crate::watts::{extract_coring, verify_watts, ComonadSpec, ComonadSpecJson};

use super::encode::{parse_field, schema, Entry2, Entry3};
use super::schema::{AlgebraJson, BasisJson, BialgebraJson, ComoduleJson, CoringJson, TorHopfJson};

/// A shifted-subgroup coring: the coring fields plus the stable data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StableCoringJson {
    pub stable: bool,
    pub p: u64,
    pub r: usize,
    pub point: Vec<i64>,
    pub hom_dims: [usize; 2],
    pub projective_dims: [usize; 2],
    pub object_blocks: Vec<usize>,
    pub field: String,
    pub base: AlgebraJson,
    pub basis: Vec<BasisJson>,
    pub left_action: Vec<Entry3>,
    pub right_action: Vec<Entry3>,
    pub comult: Vec<Entry3>,
    pub counit: Vec<Entry2>,
    pub construction: Report,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bialgebra: Option<BialgebraJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Report>,
}

impl StableCoringJson {
    pub fn encode(s: &StableCoring) -> Self {
        let c = CoringJson::encode(&s.coring);
        StableCoringJson {
            stable: true,
            p: s.p,
            r: s.r,
            point: s.point.clone(),
            hom_dims: s.hom_dims,
            projective_dims: s.projective_dims,
            object_blocks: s.object_blocks.clone(),
            field: c.field,
            base: c.base,
            basis: c.basis,
            left_action: c.left_action,
            right_action: c.right_action,
            comult: c.comult,
            counit: c.counit,
            construction: s.report.clone(),
            bialgebra: s.bialgebra.as_ref().map(BialgebraJson::encode),
            certificate: s.certificate.clone(),
        }
    }

    pub fn coring_json(&self) -> CoringJson {
        CoringJson {
            field: self.field.clone(),
            base: self.base.clone(),
            basis: self.basis.clone(),
            left_action: self.left_action.clone(),
            right_action: self.right_action.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
        }
    }

    /// Rebuilds the structure; `Λ` is recomputed from `p`.
    pub fn decode(&self, base: &str) -> Result<StableCoring> {
        if !self.stable {
            return Err(schema(&format!("{base}/stable"), "expected true"));
        }
        Ok(StableCoring {
            p: self.p,
            r: self.r,
            point: self.point.clone(),
            endo: stable_endomorphism_algebra(self.p)?,
            coring: self.coring_json().decode(base)?,
            hom_dims: self.hom_dims,
            projective_dims: self.projective_dims,
            object_blocks: self.object_blocks.clone(),
            report: self.construction.clone(),
            bialgebra: self.bialgebra.as_ref().map(|b| b.decode(&format!("{base}/bialgebra"))).transpose()?,
            certificate: self.certificate.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtractedJson {
    pub spec: ComonadSpecJson,
    pub degree_bound: i64,
    pub battery: usize,
    pub seed: u64,
    pub coring: CoringJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EndoJson {
    pub p: u64,
    pub algebra: AlgebraJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescentJson {
    pub extension: String,
    pub coalgebra: BialgebraJson,
    /// Comodules over `D ⊗_K (L ⊗_K L)`.
    pub induced: Vec<ComoduleJson>,
    /// Their `K`-forms, comodules over `D`.
    pub descended: Vec<ComoduleJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum Payload {
    Tor(TorHopfJson),
    Bialgebra(BialgebraJson),
    Coring(CoringJson),
    StableCoring(Box<StableCoringJson>),
    Extracted(Box<ExtractedJson>),
    StableEndo(EndoJson),
    Descent(DescentJson),
}

pub const DATA: &str = "/payload/data";

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Tor(_) => "tor",
            Payload::Bialgebra(_) => "bialgebra",
            Payload::Coring(_) => "coring",
            Payload::StableCoring(_) => "stable_coring",
            Payload::Extracted(_) => "extracted",
            Payload::StableEndo(_) => "stable_endo",
            Payload::Descent(_) => "descent",
        }
    }

    /// The grading convention of the stored degrees.
    pub fn convention(&self) -> Convention {
        match self {
            Payload::Tor(t) => t.convention,
            Payload::Bialgebra(b) => b.convention,
            _ => Convention::Ungraded,
        }
    }
}

fn agreement(report: &mut Report, name: &str, ok: bool) {
    let mut check = AxiomCheck::new(name);
    check.require(ok, || "stored data differ".into());
    check.finish(report);
}

fn bialgebra_report(b: &Bialgebra) -> Report {
    if b.antipode.is_some() {
        b.check_hopf()
    } else {
        b.check()
    }
}

/// Decodes a payload and runs every check applicable to it.
pub fn check_payload(payload: &Payload) -> Result<Report> {
    let mut report = Report::new();
    match payload {
        Payload::Tor(t) => report.extend(bialgebra_report(&t.decode(DATA)?.hopf)),
        Payload::Bialgebra(b) => report.extend(bialgebra_report(&b.decode(DATA)?)),
        Payload::Coring(c) => report.extend(c.decode(DATA)?.check()),
        Payload::StableCoring(s) => {
            let sc = s.decode(DATA)?;
            report.extend(sc.coring.check());
            if let Some(b) = &sc.bialgebra {
                report.extend(bialgebra_report(b).prefixed("bialgebra"));
                report.extend(certify_exterior(b, sc.r).prefixed("certificate"));
            }
            let fresh = shifted_subgroup_coring(sc.p, sc.r, &sc.point)?;
            agreement(&mut report, "agrees with recomputation", fresh == sc);
        }
        Payload::Extracted(e) => {
            let spec = ComonadSpec::from_json(&e.spec, e.degree_bound)?;
            let mut c = extract_coring(&spec)?;
            let stored = e.coring.decode(&format!("{DATA}/coring"))?;
            agreement(&mut report, "agrees with recomputation", stored == c.coring);
            c.coring = stored;
            c.report = c.coring.check();
            report.extend(verify_watts(&spec, &c, e.battery, e.seed));
        }
        Payload::StableEndo(e) => {
            let endo = stable_endomorphism_algebra(e.p)?;
            report.extend(endo.report.clone());
            let stored = e.algebra.decode(&format!("{DATA}/algebra"))?;
            let mut assoc = AxiomCheck::new("stored algebra is associative and unital");
            let defect = stored.check();
            assoc.require(defect.is_none(), || format!("{defect:?}"));
            assoc.finish(&mut report);
            agreement(&mut report, "agrees with recomputation", stored == endo.algebra);
        }
        Payload::Descent(d) => {
            let ext = parse_field(&d.extension, &format!("{DATA}/extension"))?;
            let g = GaloisExtension::new(&ext)?;
            let coalgebra = d.coalgebra.decode(&format!("{DATA}/coalgebra"))?;
            if d.induced.len() != d.descended.len() {
                return Err(schema(&format!("{DATA}/descended"), "one descended comodule per induced comodule expected"));
            }
            let mut axioms_up = AxiomCheck::new("induced comodules satisfy the comodule axioms");
            let mut axioms_down = AxiomCheck::new("descended comodules satisfy the comodule axioms");
            let mut descends = AxiomCheck::new("descent of the induced comodule is the stored K-form");
            let mut round = AxiomCheck::new("descend∘induce is the identity");
            let mut dims = AxiomCheck::new("dim_K·[L:K] = dim_L");
            for (k, (u, l)) in d.induced.iter().zip(&d.descended).enumerate() {
                let up: Comodule = u.decode(&format!("{DATA}/induced/{k}"))?;
                let down: Comodule = l.decode(&format!("{DATA}/descended/{k}"))?;
                axioms_up.require(up.check().all_pass(), || format!("comodule {k}"));
                axioms_down.require(down.check().all_pass(), || format!("comodule {k}"));
                descends.require(descend_comodule(&up, &coalgebra, &g).ok().as_ref() == Some(&down), || format!("comodule {k}"));
                let again = induce_comodule(&down, &coalgebra, &g).and_then(|m| descend_comodule(&m, &coalgebra, &g));
                round.require(again.ok().as_ref() == Some(&down), || format!("comodule {k}"));
                dims.require(down.dim() * g.degree() == up.dim(), || format!("comodule {k}: {}·{} ≠ {}", down.dim(), g.degree(), up.dim()));
            }
            for check in [axioms_up, axioms_down, descends, round, dims] {
                check.finish(&mut report);
            }
        }
    }
    Ok(report)
}

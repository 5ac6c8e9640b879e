//! JSON shapes for every CLI report.  Field order is the key order; nothing
//! depends on hash iteration, so equal inputs give byte-equal output.

use serde::Serialize;

use crate::algebra::{is_left_multiserial, Algebra};
use crate::ar::{check_bounds, is_projective, AlmostSplit, BoundsReport, Census, Certification};
use crate::error::Result;
use crate::field::Scalar;
use crate::irreducibility::ReportJson;
use crate::module_rep::{is_isomorphic_indec, Rep, RepJson};
use crate::quiver::{Path, Quiver};
use crate::uniserial::{phi_p, MastStatus, UniserialModule, UniserialPoint};

/// Echoed in every report so a reader never has to guess the product order.
pub const PATH_ORDER: &str = "right-to-left: b*a means first a, then b";

#[derive(Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub command: &'a str,
    pub path_order: &'static str,
    pub field: String,
    pub result: T,
}

/// Pretty JSON followed by a newline.
pub fn emit_report<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
pub struct ValidateReport {
    pub vertices: Vec<String>,
    pub arrows: Vec<String>,
    pub relations: Vec<String>,
    pub dim: usize,
}

pub fn validate_report(alg: &Algebra) -> ValidateReport {
    let q = alg.quiver();
    ValidateReport {
        vertices: q.vertex_names().to_vec(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| format!("{}:{}->{}", a.name, q.vertex_name(a.source), q.vertex_name(a.target)))
            .collect(),
        relations: alg.relations().iter().map(|r| r.display(q)).collect(),
        dim: alg.dim(),
    }
}

#[derive(Serialize)]
pub struct AlgebraReport {
    pub dim: usize,
    pub basis: Vec<String>,
    pub nilpotency: usize,
    /// `dim J^k` for `k = 0..=N`.
    pub radical_series: Vec<usize>,
    pub projective_dims: Vec<usize>,
    pub triangular: bool,
    pub monomial: bool,
    pub multiserial_m: Option<usize>,
}

pub fn algebra_report(alg: &Algebra) -> AlgebraReport {
    let q = alg.quiver();
    AlgebraReport {
        dim: alg.dim(),
        basis: alg.basis().iter().map(|p| q.path_name(p)).collect(),
        nilpotency: alg.nilpotency(),
        radical_series: (0..=alg.nilpotency()).map(|k| alg.radical_power(k).dim()).collect(),
        projective_dims: (0..q.num_vertices()).map(|v| alg.projective_basis(v).len()).collect(),
        triangular: alg.is_triangular(),
        monomial: alg.is_monomial(),
        multiserial_m: is_left_multiserial(alg),
    }
}

#[derive(Serialize)]
pub struct MastEntry {
    pub path: String,
    pub length: usize,
    pub status: MastStatus,
}

pub fn masts_report(q: &Quiver, masts: &[(Path, MastStatus)]) -> Vec<MastEntry> {
    masts.iter().map(|(p, s)| MastEntry { path: q.path_name(p), length: p.len(), status: *s }).collect()
}

#[derive(Serialize)]
pub struct PointJson {
    pub coordinates: Vec<(String, Scalar)>,
    pub class: usize,
}

#[derive(Serialize)]
pub struct UniserialsReport {
    pub mast: String,
    pub detours: Vec<String>,
    pub coordinates: usize,
    /// Every point of the variety, or a single realizing point.
    pub points: Vec<PointJson>,
    /// One representative per isomorphism class, indexed by `PointJson::class`.
    pub classes: Vec<RepJson>,
    pub enumerated: bool,
}

/// Group the modules `Φ_p(point)` into isomorphism classes.
pub fn uniserials_report(alg: &Algebra, mast: &Path, points: &[UniserialPoint], enumerated: bool) -> Result<UniserialsReport> {
    let q = alg.quiver();
    let mut reps: Vec<Rep> = Vec::new();
    let mut out = Vec::new();
    for pt in points {
        let m = phi_p(alg, pt)?;
        let class = match reps.iter().position(|r| is_isomorphic_indec(r, &m.rep)) {
            Some(i) => i,
            None => {
                reps.push(m.rep.clone());
                reps.len() - 1
            }
        };
        out.push(PointJson { coordinates: pt.labels(alg), class });
    }
    let ds = crate::quiver::detours(q, mast);
    Ok(UniserialsReport {
        mast: q.path_name(mast),
        detours: ds.iter().map(|d| d.label(q)).collect(),
        coordinates: ds.iter().map(|d| d.v_family.len()).sum(),
        points: out,
        classes: reps.iter().map(Rep::to_json).collect(),
        enumerated,
    })
}

#[derive(Serialize)]
pub struct CheckReport {
    pub mast: String,
    pub module: RepJson,
    pub fdelta: Vec<(String, Scalar)>,
    pub coordinates: Vec<(String, Scalar)>,
    pub report: ReportJson,
    /// Whether the attached witness passed all three verification predicates.
    pub witness_verified: Option<bool>,
}

#[derive(Serialize)]
pub struct ArReport {
    pub module: RepJson,
    pub projective: bool,
    pub dtr: Option<RepJson>,
    pub middle: Option<RepJson>,
    pub alpha: Option<usize>,
    pub summand_dims: Vec<Vec<usize>>,
    pub certification: Option<Certification>,
    pub bounds: Option<BoundsReport>,
}

pub fn ar_report(alg: &Algebra, m: &Rep, ar: Option<&AlmostSplit>, u: Option<&UniserialModule>) -> ArReport {
    ArReport {
        module: m.to_json(),
        projective: is_projective(alg, m),
        dtr: ar.map(|a| a.ses.a.to_json()),
        middle: ar.map(|a| a.middle().to_json()),
        alpha: ar.map(AlmostSplit::alpha),
        summand_dims: ar.map_or_else(Vec::new, |a| a.summands.iter().map(|s| s.rep.dims().to_vec()).collect()),
        certification: ar.map(|a| a.certification.clone()),
        bounds: match (ar, u) {
            (Some(a), Some(u)) => Some(check_bounds(alg, u, a)),
            _ => None,
        },
    }
}

#[derive(Serialize)]
pub struct CensusEntry {
    pub id: usize,
    pub dims: Vec<usize>,
    pub uniserial: bool,
    pub projective: bool,
    pub module: RepJson,
}

#[derive(Serialize)]
pub struct CensusReport {
    pub dim_cap: usize,
    pub exhaustive: bool,
    pub skipped: Vec<Vec<usize>>,
    pub modules: Vec<CensusEntry>,
}

pub fn census_report(alg: &Algebra, c: &Census) -> CensusReport {
    CensusReport {
        dim_cap: c.dim_cap,
        exhaustive: c.exhaustive,
        skipped: c.skipped.clone(),
        modules: c
            .modules
            .iter()
            .enumerate()
            .map(|(id, m)| CensusEntry {
                id,
                dims: m.dims().to_vec(),
                uniserial: m.is_uniserial(),
                projective: is_projective(alg, m),
                module: m.to_json(),
            })
            .collect(),
    }
}

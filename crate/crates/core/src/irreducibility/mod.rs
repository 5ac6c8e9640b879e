//! Irreducibility of radical embeddings `JU -> U` for uniserial `U`.

pub mod conditions;
mod sufficient;
pub mod witness;

use serde::Serialize;

use crate::algebra::{reverse_path, Algebra};
use crate::ar::dual;
use crate::error::{Error, Result};
use crate::module_rep::{is_isomorphic, Rep};
use crate::uniserial::UniserialModule;

pub use conditions::*;
pub use sufficient::{sufficient_direction, Splitting};
pub use witness::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem {
    #[serde(rename = "monomial")]
    Monomial,
    #[serde(rename = "multiserial-dim≤1")]
    MultiserialDim1,
    #[serde(rename = "conjecture-sufficient")]
    ConjectureSufficient,
    #[serde(rename = "obstruction")]
    Obstruction,
    #[serde(rename = "necessary-only")]
    NecessaryOnly,
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub verdict: Verdict,
    pub theorem: Theorem,
    pub clauses: Vec<Clause>,
    pub failing: Vec<String>,
    /// The verdict rests on the unproven direction of the criterion.
    pub conjectural: bool,
    /// `Some` only when a theorem or a verified witness decides the question.
    pub irreducible: Option<bool>,
    pub witness: Option<FactorizationWitness>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ReportJson {
    pub verdict: Verdict,
    pub theorem: Theorem,
    pub irreducible: Option<bool>,
    pub conjectural: bool,
    pub failing: Vec<String>,
    pub clauses: Vec<Clause>,
    pub witness: Option<WitnessJson>,
    pub notes: Vec<String>,
}

impl CriterionReport {
    fn new(verdict: Verdict, theorem: Theorem, clauses: Vec<Clause>) -> CriterionReport {
        let failing = clauses.iter().filter(|c| !c.holds).map(|c| c.id.clone()).collect();
        let irreducible = match (theorem, verdict) {
            (Theorem::NecessaryOnly | Theorem::Obstruction, Verdict::Fails) => Some(false),
            (Theorem::Monomial | Theorem::MultiserialDim1, Verdict::Holds) => Some(true),
            (Theorem::Monomial | Theorem::MultiserialDim1, Verdict::Fails) => Some(false),
            (Theorem::ConjectureSufficient, Verdict::Holds) => Some(true),
            _ => None,
        };
        CriterionReport {
            verdict,
            theorem,
            clauses,
            failing,
            conjectural: false,
            irreducible,
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn to_json(&self) -> ReportJson {
        ReportJson {
            verdict: self.verdict,
            theorem: self.theorem,
            irreducible: self.irreducible,
            conjectural: self.conjectural,
            failing: self.failing.clone(),
            clauses: self.clauses.clone(),
            witness: self.witness.as_ref().map(FactorizationWitness::to_json),
            notes: self.notes.clone(),
        }
    }
}

fn from_single(o: SingleArrowOutcome, theorem: Theorem) -> CriterionReport {
    CriterionReport::new(o.verdict, theorem, o.clauses)
}

/// Decide whether `JU -> U` is irreducible, most decisive theorem first:
/// obstruction, monomial, multiserial, necessary conditions, then the
/// sufficient direction of the criterion. A failing verdict is backed by a
/// verified witness whenever one can be built; `op` enables the almost split
/// fallback.
pub fn check(alg: &Algebra, op: Option<&Algebra>, u: &UniserialModule) -> Result<CriterionReport> {
    let q = alg.quiver();
    let p = u.mast();
    let mut report = if p.is_stationary() {
        let mut r = CriterionReport::new(
            Verdict::Fails,
            Theorem::NecessaryOnly,
            vec![Clause { id: "simple".into(), holds: false, detail: "JU = 0".into() }],
        );
        r.notes.push("the zero map is split".into());
        return Ok(r);
    } else if let Some(b) = obstruction_extra_arrow(alg, p) {
        CriterionReport::new(
            Verdict::Fails,
            Theorem::Obstruction,
            vec![Clause {
                id: format!("obstruction:{}", q.arrow(b).name),
                holds: false,
                detail: format!("{} leaves {} besides the first mast arrow", q.arrow(b).name, q.vertex_name(p.source())),
            }],
        )
    } else if alg.is_triangular() && alg.is_monomial() {
        from_single(check_monomial(alg, p)?, Theorem::Monomial)
    } else {
        match check_multiserial(alg, p) {
            Ok(o) => from_single(o, Theorem::MultiserialDim1),
            Err(Error::Hypotheses(why)) => {
                let mut r = general(alg, u)?;
                r.notes.insert(0, format!("multiserial theorem not applicable: {why}"));
                r
            }
            Err(e) => return Err(e),
        }
    };
    if report.verdict == Verdict::Fails {
        let mut errors = Vec::new();
        for c in report.failing.clone() {
            match build_witness(alg, op, u, &c) {
                Ok(w) => {
                    report.witness = Some(w);
                    report.irreducible = Some(false);
                    break;
                }
                Err(e) => errors.push(format!("witness for {c}: {e}")),
            }
        }
        if report.witness.is_none() {
            report.notes.extend(errors);
        }
    }
    Ok(report)
}

/// Necessary conditions, then (2)(a) and (2)(b).
fn general(alg: &Algebra, u: &UniserialModule) -> Result<CriterionReport> {
    let p = u.mast();
    let mut notes = Vec::new();
    match check_1to2a(alg, u) {
        Ok(cl) => {
            if cl.iter().any(|c| !c.holds) {
                return Ok(CriterionReport::new(Verdict::Fails, Theorem::NecessaryOnly, cl));
            }
        }
        Err(Error::Hypotheses(why)) => notes.push(format!("necessary conditions skipped: {why}")),
        Err(e) => return Err(e),
    }
    if !alg.is_triangular() {
        let mut r = CriterionReport::new(Verdict::Unknown, Theorem::NecessaryOnly, vec![]);
        notes.push("no decisive criterion for algebras with oriented cycles".into());
        r.notes = notes;
        return Ok(r);
    }
    let m = Mast::new(alg, p)?;
    let mut clauses = check_2a(alg, &m);
    let a_ok = clauses.iter().all(|c| c.holds);
    let b = check_2b(alg, p)?;
    clauses.extend(b.clauses);
    let verdict = match (a_ok, b.verdict) {
        (false, _) | (_, Verdict::Fails) => Verdict::Fails,
        (true, v) => v,
    };
    let mut r = CriterionReport::new(verdict, Theorem::ConjectureSufficient, clauses);
    if verdict != Verdict::Holds {
        r.conjectural = true;
        r.notes.push("failure of the criterion implies reducibility only conjecturally".into());
    }
    if verdict == Verdict::Unknown {
        r.failing.clear();
    }
    r.notes.extend(notes);
    Ok(r)
}

/// Irreducibility of the socle factor projection `U -> U/soc U`, via the
/// radical embedding of `DU` over the opposite algebra.
pub fn check_socle_projection(_alg: &Algebra, op: &Algebra, u: &UniserialModule) -> Result<CriterionReport> {
    let du = UniserialModule::from_rep(op, dual(op, &u.rep), &reverse_path(u.mast()))?;
    let back = op.opposite()?;
    check(op, Some(&back), &du)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShapeCase {
    RadicalEmbedding,
    SocleProjection,
    Impossible,
}

/// Which shape an irreducible map `U -> W` between uniserials must have.
pub fn irreducible_shape_filter(u: &Rep, w: &Rep) -> Result<ShapeCase> {
    if !u.is_uniserial() || !w.is_uniserial() {
        return Err(Error::NotUniserial("both modules must be uniserial".into()));
    }
    let (jw, _) = w.sub_rep(&w.radical());
    if !u.is_zero() && is_isomorphic(u, &jw) {
        return Ok(ShapeCase::RadicalEmbedding);
    }
    let (top, _) = u.quotient(&u.socle());
    if !w.is_zero() && is_isomorphic(w, &top) {
        return Ok(ShapeCase::SocleProjection);
    }
    Ok(ShapeCase::Impossible)
}

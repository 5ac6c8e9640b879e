use serde::Serialize;

use crate::algebra::{is_left_multiserial, Algebra};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::module_rep::{decompose, ModuleMap, Rep, Submodule};
use crate::uniserial::UniserialModule;

use super::{minimal_presentation, AlmostSplit, Ses};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub applies: bool,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub alpha: usize,
    pub soc_dtr_len: usize,
    pub mono_maps: usize,
    pub epi_maps: usize,
    pub multiserial_m: Option<usize>,
    pub cyclic_presentation: bool,
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    /// Names of applicable bounds that fail; any entry indicates a bug.
    pub fn violations(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| c.applies && !c.holds).map(|c| c.name).collect()
    }
}

fn map_sub(phi: &ModuleMap, from: &Submodule, to: &Rep) -> Submodule {
    let parts = from
        .parts
        .iter()
        .enumerate()
        .map(|(v, s)| {
            let imgs: Vec<_> = s.basis().iter().map(|b| phi.blocks[v].apply(b)).collect();
            Subspace::spanned_by(to.field(), to.dim_at(v), &imgs)
        })
        .collect();
    Submodule { parts }
}

/// Evaluate every applicable bound on `α(U)` for a uniserial `U` with its
/// almost split sequence.
pub fn check_bounds(alg: &Algebra, u: &UniserialModule, ar: &AlmostSplit) -> BoundsReport {
    let q = alg.quiver();
    let alpha = ar.alpha();
    let a = &ar.ses.a;
    let soc_a = a.socle();
    let soc_len = soc_a.dim();
    let parts: Vec<ModuleMap> = ar.summands.iter().map(|s| ar.ses.g.compose(&s.inclusion)).collect();
    let mono = parts.iter().filter(|g| g.is_injective()).count();
    let epis: Vec<usize> = (0..parts.len()).filter(|&i| parts[i].is_surjective()).collect();
    let m = is_left_multiserial(alg);
    let pres = minimal_presentation(alg, &u.rep);
    let cyclic = pres.p0.vertices.len() == 1 && pres.p1.vertices.len() == 1;
    let p = u.mast();
    let out_degree = q.arrows_from(p.source()).count();
    let pe = alg.path_elem(p);
    let jp_zero = q.arrows_from(p.target()).all(|b| crate::linalg::is_zero_vec(&alg.mul(&alg.arrow_elem(b), &pe)));

    let f_soc = map_sub(&ar.ses.f, &soc_a, &ar.ses.e);
    let simple_socle_epis: Vec<usize> = epis.iter().copied().filter(|&i| ar.summands[i].rep.socle().dim() == 1).collect();
    let socle_inside = simple_socle_epis.iter().all(|&i| {
        let s = &ar.summands[i];
        map_sub(&s.inclusion, &s.rep.socle(), &ar.ses.e).is_subset_of(&f_soc)
    });

    let check = |name, applies, holds, detail: String| BoundCheck { name, applies, holds, detail };
    let checks = vec![
        check("soc-length", true, alpha <= soc_len + 1, format!("alpha={alpha} <= {}", soc_len + 1)),
        check("mono-at-most-one", true, mono <= 1, format!("{mono} mono components")),
        check("epi-count", true, epis.len() <= soc_len, format!("{} epi components <= {soc_len}", epis.len())),
        check(
            "epi-simple-socle",
            !simple_socle_epis.is_empty(),
            socle_inside,
            format!("{} epi components with simple socle", simple_socle_epis.len()),
        ),
        check("cyclic-presentation", cyclic, alpha <= 2, format!("alpha={alpha} <= 2")),
        check(
            "multiserial",
            matches!(m, Some(k) if k >= 2),
            m.map_or(true, |k| alpha <= k),
            format!("alpha={alpha} <= m={}", m.map_or("-".into(), |k| k.to_string())),
        ),
        check("left-serial", m == Some(1), alpha <= 2, format!("alpha={alpha} <= 2")),
        check("single-arrow", m.is_some() && out_degree == 1, alpha <= 2, format!("alpha={alpha} <= 2")),
        check("biserial-jp-zero", m == Some(2) && jp_zero, alpha == 1, format!("alpha={alpha} == 1")),
    ];
    BoundsReport {
        alpha,
        soc_dtr_len: soc_len,
        mono_maps: mono,
        epi_maps: epis.len(),
        multiserial_m: m,
        cyclic_presentation: cyclic,
        checks,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Dichotomy {
    Indecomposable,
    TwoUniserials,
    Violation { summands: usize },
}

/// The middle term of an exact sequence with uniserial ends is indecomposable
/// or a sum of two uniserials.
pub fn middle_term_dichotomy(ses: &Ses) -> Result<Dichotomy> {
    if !ses.a.is_uniserial() || !ses.c.is_uniserial() {
        return Err(Error::Hypotheses("end terms must be uniserial".into()));
    }
    let parts = decompose(&ses.e);
    Ok(match parts.len() {
        1 => Dichotomy::Indecomposable,
        2 if parts.iter().all(|s| s.rep.is_uniserial()) => Dichotomy::TwoUniserials,
        n => Dichotomy::Violation { summands: n },
    })
}

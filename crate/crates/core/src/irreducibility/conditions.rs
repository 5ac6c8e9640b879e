//! Clause checks on a mast `p = α_{n-1} ⋯ α_1`.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{is_zero_vec, Matrix, Subspace};
use crate::module_rep::{is_isomorphic, Projective};
use crate::quiver::{classify_arrows, compose, detours, minimal_non_routes, ArrowClassification, Detour, Path};
use crate::uniserial::UniserialModule;

/// Cap on `|K|^d` for the exhaustive search over `(w_γ)` in `check_2b`.
pub const W_SEARCH_CAP: u64 = 1 << 16;
/// Alternating rounds of the `(r, w)` search over `Q`.
pub const ALTERNATING_ROUNDS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub id: String,
    pub holds: bool,
    pub detail: String,
}

impl Clause {
    fn new(id: String, holds: bool, detail: String) -> Clause {
        Clause { id, holds, detail }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Unknown,
}

/// The mast with its arrow classification and the paths the clauses use.
#[derive(Clone, Debug)]
pub struct Mast {
    pub path: Path,
    pub elem: Elem,
    pub cls: ArrowClassification,
}

impl Mast {
    pub fn new(alg: &Algebra, p: &Path) -> Result<Mast> {
        let elem = alg.path_elem(p);
        if is_zero_vec(&elem) {
            return Err(Error::ZeroPath(alg.quiver().path_name(p)));
        }
        Ok(Mast { path: p.clone(), elem, cls: classify_arrows(alg.quiver(), p)? })
    }

    pub fn n(&self) -> usize {
        self.cls.n()
    }

    /// `α_{i-1} ⋯ α_1`, from vertex 1 to vertex `i`.
    pub fn head(&self, alg: &Algebra, i: usize) -> Path {
        self.path.right_subpath(alg.quiver(), i - 1)
    }

    /// `α_{n-1} ⋯ α_i`, from vertex `i` to vertex `n`.
    pub fn tail(&self, alg: &Algebra, i: usize) -> Path {
        self.path.left_factor(alg.quiver(), i - 1)
    }

    fn pos(&self, v: usize) -> usize {
        self.cls.position(v).expect("vertex on the mast")
    }

    /// `α_{n-1} ⋯ α_{t(a)} a` for an arrow ending on the mast.
    pub fn tail_through(&self, alg: &Algebra, a: usize) -> Path {
        let q = alg.quiver();
        compose(q, &self.tail(alg, self.pos(q.arrow(a).target)), &q.arrow_path(a)).expect("composable")
    }

    /// `a α_{s(a)-1} ⋯ α_1` for an arrow leaving the mast.
    pub fn head_through(&self, alg: &Algebra, a: usize) -> Path {
        let q = alg.quiver();
        self.head(alg, self.pos(q.arrow(a).source)).extend(q, a)
    }

    /// `Jp`.
    pub fn jp(&self, alg: &Algebra) -> Subspace {
        alg.radical_times(1, &self.elem)
    }

    /// `f_δ(1)`: the scalar with `δ α_{s(δ)-1} ⋯ α_1 = f α_{t(δ)-1} ⋯ α_1`.
    pub fn f_delta(&self, alg: &Algebra, d: usize) -> Option<Scalar> {
        let x = alg.path_elem(&self.head_through(alg, d));
        let y = alg.path_elem(&self.head(alg, self.pos(alg.quiver().arrow(d).target)));
        scalar_multiple(alg, &x, &y)
    }
}

/// `c` with `x = c y`, if any.
pub fn scalar_multiple(alg: &Algebra, x: &Elem, y: &Elem) -> Option<Scalar> {
    let f = alg.field();
    if is_zero_vec(x) {
        return Some(f.zero());
    }
    let i = y.iter().position(|c| !c.is_zero())?;
    let c = &x[i] * &y[i].inv();
    (alg.sub(x, &alg.scale(&c, y)).iter().all(Scalar::is_zero)).then_some(c)
}

/// `{ a · x : x ∈ sub }` for a fixed left factor `a`.
fn left_times(alg: &Algebra, a: &Elem, sub: &Subspace) -> Subspace {
    let vecs: Vec<Elem> = sub.basis().iter().map(|b| alg.mul(a, b)).collect();
    Subspace::spanned_by(alg.field(), alg.dim(), &vecs)
}

/// `p J e_x`: products `p b` with `b` a basis path of positive length from `x` to `s(p)`.
pub fn pj_at(alg: &Algebra, m: &Mast, x: usize) -> Subspace {
    let s = m.path.source();
    let vecs: Vec<Elem> = alg
        .block(s, x)
        .into_iter()
        .filter(|&i| !alg.basis_path(i).is_stationary())
        .map(|i| alg.mul(&m.elem, &alg.basis_elem(i)))
        .collect();
    Subspace::spanned_by(alg.field(), alg.dim(), &vecs)
}

/// Condition (2)(a): `β α ⋯ α_1 ∈ Jp` for `β ∈ B` and
/// `δ α ⋯ α_1 ∈ K α_{t(δ)-1} ⋯ α_1` for `δ ∈ D`.
pub fn check_2a(alg: &Algebra, m: &Mast) -> Vec<Clause> {
    let q = alg.quiver();
    let jp = m.jp(alg);
    let mut out = Vec::new();
    for &b in &m.cls.b {
        let path = m.head_through(alg, b);
        let holds = jp.contains(&alg.path_elem(&path));
        out.push(Clause::new(
            format!("2a-B:{}", q.arrow(b).name),
            holds,
            format!("{} {} Jp", q.path_name(&path), if holds { "∈" } else { "∉" }),
        ));
    }
    for &d in &m.cls.d {
        let path = m.head_through(alg, d);
        let f = m.f_delta(alg, d);
        out.push(Clause::new(
            format!("2a-D:{}", q.arrow(d).name),
            f.is_some(),
            match f {
                Some(c) => format!("{} = {} {}", q.path_name(&path), c, q.path_name(&m.head(alg, m.pos(q.arrow(d).target)))),
                None => format!("{} is not a multiple of the mast subpath", q.path_name(&path)),
            },
        ));
    }
    out
}

/// Detours `(α, u)` on `p` with `αu ∉ span(non-routes) + span(V(α, u))`.
pub fn essential_detours(alg: &Algebra, p: &Path) -> Vec<Detour> {
    let q = alg.quiver();
    let nr: Vec<Elem> = minimal_non_routes(q, p).iter().map(|x| alg.path_elem(x)).collect();
    let non_routes = alg.left_ideal(&nr);
    detours(q, p)
        .into_iter()
        .filter(|d| {
            let mut span = non_routes.clone();
            for v in &d.v_family {
                span.insert(&alg.path_elem(v));
            }
            !span.contains(&alg.path_elem(&d.path(q)))
        })
        .collect()
}

/// An arrow leaving `s(p)` other than the first arrow of `p`.
pub fn obstruction_extra_arrow(alg: &Algebra, p: &Path) -> Option<usize> {
    let first = *p.arrows().last()?;
    alg.quiver().arrows_from(p.source()).find(|&a| a != first)
}

/// Whether some oriented cycle passes through `v`.
pub fn on_oriented_cycle(alg: &Algebra, v: usize) -> bool {
    let q = alg.quiver();
    let mut seen = vec![false; q.num_vertices()];
    let mut stack: Vec<usize> = q.arrows_from(v).map(|a| q.arrow(a).target).collect();
    while let Some(w) = stack.pop() {
        if w == v {
            return true;
        }
        if !std::mem::replace(&mut seen[w], true) {
            stack.extend(q.arrows_from(w).map(|a| q.arrow(a).target));
        }
    }
    false
}

/// `Λe/Jp` for `e = s(p)`.
pub fn lambda_e_mod_jp(alg: &Algebra, m: &Mast) -> crate::module_rep::Rep {
    let proj = Projective::new(alg, m.path.source());
    let jp = m.jp(alg);
    proj.cyclic_quotient(alg, &jp).0
}

/// Necessary conditions for irreducibility: detours inessential, non-routes
/// inside `Jp`, and `U ≅ Λe/Jp`.
pub fn check_1to2a(alg: &Algebra, u: &UniserialModule) -> Result<Vec<Clause>> {
    let q = alg.quiver();
    let p = u.mast();
    if on_oriented_cycle(alg, p.source()) {
        return Err(Error::Hypotheses(format!("{} starts on an oriented cycle", q.vertex_name(p.source()))));
    }
    let m = Mast::new(alg, p)?;
    let mut out = Vec::new();
    for d in essential_detours(alg, p) {
        out.push(Clause::new(format!("1to2a-i:{}", d.label(q)), false, "essential detour".into()));
    }
    let jp = m.jp(alg);
    for nr in minimal_non_routes(q, p) {
        let x = alg.path_elem(&nr);
        if !jp.contains(&x) {
            out.push(Clause::new(format!("1to2a-ii:{}", q.path_name(&nr)), false, "non-route outside Jp".into()));
        }
    }
    if out.is_empty() {
        let iso = is_isomorphic(&u.rep, &lambda_e_mod_jp(alg, &m));
        out.push(Clause::new("1to2a-iso".into(), iso, format!("U {} Λe/Jp", if iso { "≅" } else { "≇" })));
    }
    Ok(out)
}

/// `dim Jα_{n-1} / J²α_{n-1}`.
pub fn last_arrow_top_dim(alg: &Algebra, m: &Mast) -> Option<usize> {
    let last = *m.path.arrows().first()?;
    let a = alg.arrow_elem(last);
    Some(alg.radical_times(1, &a).dim() - alg.radical_times(2, &a).dim())
}

/// Arrows `β'` with `{β'p + J²p}` a basis of `Jp/J²p` (requires that quotient
/// to be one-dimensional).
fn single_basis_arrows(alg: &Algebra, m: &Mast) -> Vec<usize> {
    let j2p = alg.radical_times(2, &m.elem);
    alg.quiver()
        .arrows_from(m.path.target())
        .filter(|&b| !j2p.contains(&alg.mul(&alg.arrow_elem(b), &m.elem)))
        .collect()
}

fn triangular(alg: &Algebra) -> Result<()> {
    if alg.is_triangular() {
        Ok(())
    } else {
        Err(Error::Hypotheses("quiver has an oriented cycle".into()))
    }
}

/// Single-`β'` clauses (b)(i), (b)(ii) for a candidate `β'`.
fn single_arrow_clauses(alg: &Algebra, m: &Mast, bp: usize, monomial: bool) -> Vec<Clause> {
    let q = alg.quiver();
    let be = alg.arrow_elem(bp);
    let bname = &q.arrow(bp).name;
    let mut out = Vec::new();
    for &g in &m.cls.c {
        let lhs = alg.mul(&be, &alg.path_elem(&m.tail_through(alg, g)));
        let holds = if monomial {
            is_zero_vec(&lhs)
        } else {
            left_times(alg, &be, &pj_at(alg, m, q.arrow(g).source)).contains(&lhs)
        };
        out.push(Clause::new(
            format!("2b-i:{}", q.arrow(g).name),
            holds,
            format!("{bname} {} {}", q.path_name(&m.tail_through(alg, g)), if holds { "ok" } else { "violates" }),
        ));
    }
    for &d in &m.cls.d {
        let lhs = alg.mul(&be, &alg.path_elem(&m.tail_through(alg, d)));
        let rhs = alg.mul(&be, &alg.path_elem(&m.tail(alg, m.pos(q.arrow(d).source))));
        let holds = if monomial { is_zero_vec(&lhs) } else { scalar_multiple(alg, &lhs, &rhs).is_some() };
        out.push(Clause::new(
            format!("2b-ii:{}", q.arrow(d).name),
            holds,
            format!("{bname} {} {}", q.path_name(&m.tail_through(alg, d)), if holds { "ok" } else { "violates" }),
        ));
    }
    out
}

/// Outcome of a decisive single-`β'` criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingleArrowOutcome {
    pub verdict: Verdict,
    pub clauses: Vec<Clause>,
    /// The `β'` used for the verdict (the passing one, or the first failing).
    pub beta: Option<usize>,
    /// Failing clauses per candidate `β'`.
    pub per_beta: Vec<(usize, Vec<Clause>)>,
}

fn single_arrow_criterion(alg: &Algebra, m: &Mast, monomial: bool) -> SingleArrowOutcome {
    let q = alg.quiver();
    let mut clauses = if monomial { monomial_2a(alg, m) } else { check_2a(alg, m) };
    let a_ok = clauses.iter().all(|c| c.holds);
    let jp_zero = m.jp(alg).dim() == 0;
    let mut per_beta = Vec::new();
    let mut beta = None;
    let mut b_ok = jp_zero;
    if !jp_zero {
        // Monomial: every β' with β'p ≠ 0; otherwise: some β' spanning Jp/J²p.
        let cands: Vec<usize> = if monomial {
            q.arrows_from(m.path.target()).filter(|&b| !is_zero_vec(&alg.mul(&alg.arrow_elem(b), &m.elem))).collect()
        } else {
            single_basis_arrows(alg, m)
        };
        for &b in &cands {
            let cl = single_arrow_clauses(alg, m, b, monomial);
            per_beta.push((b, cl.into_iter().filter(|c| !c.holds).collect::<Vec<_>>()));
        }
        if monomial {
            b_ok = per_beta.iter().all(|(_, f)| f.is_empty());
            beta = per_beta.iter().find(|(_, f)| !f.is_empty()).map(|(b, _)| *b);
        } else {
            let pass = per_beta.iter().find(|(_, f)| f.is_empty());
            b_ok = pass.is_some();
            beta = pass.or(per_beta.first()).map(|(b, _)| *b);
        }
        let mut seen = std::collections::BTreeSet::new();
        for (b, fails) in &per_beta {
            if b_ok && !monomial {
                break;
            }
            for c in fails {
                if seen.insert(c.id.clone()) {
                    let mut c = c.clone();
                    c.detail = format!("{} (β' = {})", c.detail, q.arrow(*b).name);
                    clauses.push(c);
                }
            }
        }
        if b_ok {
            clauses.push(Clause::new("2b".into(), true, "single β' condition holds".into()));
        } else if seen.is_empty() {
            clauses.push(Clause::new("2b".into(), false, "no arrow spans Jp/J²p".into()));
        }
    } else {
        clauses.push(Clause::new("2b".into(), true, "Jp = 0".into()));
    }
    SingleArrowOutcome {
        verdict: if a_ok && b_ok { Verdict::Holds } else { Verdict::Fails },
        clauses,
        beta,
        per_beta,
    }
}

fn monomial_2a(alg: &Algebra, m: &Mast) -> Vec<Clause> {
    let q = alg.quiver();
    let mut out = Vec::new();
    for (list, tag) in [(&m.cls.b, "B"), (&m.cls.d, "D")] {
        for &a in list {
            let path = m.head_through(alg, a);
            let holds = alg.is_zero_path(&path);
            out.push(Clause::new(
                format!("2a-{tag}:{}", q.arrow(a).name),
                holds,
                format!("{} {} 0", q.path_name(&path), if holds { "=" } else { "≠" }),
            ));
        }
    }
    out
}

/// Equivalence for triangular monomial algebras: all four families of path
/// products vanish.
pub fn check_monomial(alg: &Algebra, p: &Path) -> Result<SingleArrowOutcome> {
    triangular(alg)?;
    if !alg.is_monomial() {
        return Err(Error::Hypotheses("algebra is not monomial".into()));
    }
    Ok(single_arrow_criterion(alg, &Mast::new(alg, p)?, true))
}

/// Equivalence when `dim Jα_{n-1}/J²α_{n-1} ≤ 1`, via a single arrow `β'`.
pub fn check_multiserial(alg: &Algebra, p: &Path) -> Result<SingleArrowOutcome> {
    triangular(alg)?;
    let m = Mast::new(alg, p)?;
    match last_arrow_top_dim(alg, &m) {
        None => Err(Error::Hypotheses("mast is stationary".into())),
        Some(d) if d > 1 => Err(Error::Hypotheses(format!("dim Jα/J²α = {d} > 1"))),
        Some(_) => Ok(single_arrow_criterion(alg, &m, false)),
    }
}

/// A representative `r ∈ e_x J e_n` for the class `βp + e_x J²p`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassRep {
    pub vertex: usize,
    pub arrow: usize,
    pub r: Elem,
}

/// A solution of (2)(b'): the family `(w_γ)` and one representative per basis class.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoBSolution {
    pub w: Vec<(usize, Elem)>,
    pub reps: Vec<ClassRep>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwoBOutcome {
    pub verdict: Verdict,
    pub clauses: Vec<Clause>,
    pub solution: Option<TwoBSolution>,
}

/// The linear data of (2)(b') for one mast.
struct TwoB<'a> {
    alg: &'a Algebra,
    /// `(x, β, basis indices of e_x J e_n, e_x J²p)`.
    classes: Vec<(usize, usize, Vec<usize>, Subspace)>,
    /// `(γ, α ⋯ α_{t(γ)} γ, basis of p J e_{s(γ)})`.
    gammas: Vec<(usize, Elem, Vec<Elem>)>,
    /// `(δ, α ⋯ α_{t(δ)} δ, α ⋯ α_{s(δ)}, f_δ(1))`.
    deltas: Vec<(usize, Elem, Elem, Option<Scalar>)>,
    pe: Elem,
}

impl<'a> TwoB<'a> {
    fn new(alg: &'a Algebra, m: &Mast) -> Result<TwoB<'a>> {
        let q = alg.quiver();
        let n = m.path.target();
        let mut targets: Vec<usize> = q.arrows_from(n).map(|a| q.arrow(a).target).collect();
        targets.sort_unstable();
        targets.dedup();
        let mut classes = Vec::new();
        for x in targets {
            let rs: Vec<usize> =
                alg.block(x, n).into_iter().filter(|&i| !alg.basis_path(i).is_stationary()).collect();
            let j2p: Vec<Elem> = alg
                .radical_power_basis(2)
                .into_iter()
                .filter(|&i| alg.basis_path(i).target() == x)
                .map(|i| alg.mul(&alg.basis_elem(i), &m.elem))
                .collect();
            let j2p = Subspace::spanned_by(alg.field(), alg.dim(), &j2p);
            for b in alg.jp_mod_j2p_basis(&m.path, Some(x))? {
                classes.push((x, b, rs.clone(), j2p.clone()));
            }
        }
        let gammas = m
            .cls
            .c
            .iter()
            .map(|&g| {
                let w = pj_at(alg, m, q.arrow(g).source).basis().to_vec();
                (g, alg.path_elem(&m.tail_through(alg, g)), w)
            })
            .collect();
        let deltas = m
            .cls
            .d
            .iter()
            .map(|&d| {
                (
                    d,
                    alg.path_elem(&m.tail_through(alg, d)),
                    alg.path_elem(&m.tail(alg, m.pos(q.arrow(d).source))),
                    m.f_delta(alg, d),
                )
            })
            .collect();
        Ok(TwoB { alg, classes, gammas, deltas, pe: m.elem.clone() })
    }

    fn w_dims(&self) -> usize {
        self.gammas.iter().map(|g| g.2.len()).sum()
    }

    /// Split flat `w` coordinates into one element per `γ`.
    fn w_elems(&self, coords: &[Scalar]) -> Vec<Elem> {
        let mut k = 0;
        self.gammas
            .iter()
            .map(|(_, _, basis)| {
                let mut w = self.alg.zero();
                for b in basis {
                    w = self.alg.add(&w, &self.alg.scale(&coords[k], b));
                    k += 1;
                }
                w
            })
            .collect()
    }

    /// Linear system for class `c`: columns per unknown, right hand side.
    /// `gammas` selects which `γ` constraints apply (with their `w`), `deltas`
    /// which `δ` constraints (with the scalar used in place of `f_δ(1)`).
    fn system(&self, c: usize, gammas: &[(usize, &Elem)], deltas: &[(usize, Scalar)]) -> (Vec<Vec<Scalar>>, Vec<Scalar>) {
        let alg = self.alg;
        let (_, b, rs, j2p) = &self.classes[c];
        let ap = alg.mul(&alg.arrow_elem(*b), &self.pe);
        let mut rhs = j2p.quotient_coordinates(&ap);
        let consts: Vec<Elem> = gammas
            .iter()
            .map(|&(g, w)| alg.sub(&self.gammas[g].1, w))
            .chain(deltas.iter().map(|(d, lam)| alg.sub(&self.deltas[*d].1, &alg.scale(lam, &self.deltas[*d].2))))
            .collect();
        rhs.extend(std::iter::repeat(alg.field().zero()).take(consts.len() * alg.dim()));
        let cols = rs
            .iter()
            .map(|&i| {
                let bi = alg.basis_elem(i);
                let mut col = j2p.quotient_coordinates(&alg.mul(&bi, &self.pe));
                for k in &consts {
                    col.extend(alg.mul(&bi, k));
                }
                col
            })
            .collect();
        (cols, rhs)
    }

    fn solve_with(&self, c: usize, gammas: &[(usize, &Elem)], deltas: &[(usize, Scalar)]) -> Option<Elem> {
        let (cols, rhs) = self.system(c, gammas, deltas);
        let f = self.alg.field();
        let x = if cols.is_empty() {
            rhs.iter().all(Scalar::is_zero).then(Vec::new)?
        } else {
            Matrix::from_columns(f, rhs.len(), &cols).solve(&rhs)?
        };
        let rs = &self.classes[c].2;
        let mut r = self.alg.zero();
        for (k, &i) in rs.iter().enumerate() {
            r[i] = x[k].clone();
        }
        Some(r)
    }

    /// Scalar choices for the `δ` constraints: `f_δ(1)` when (2)(a) supplies
    /// it, else every field element (finite fields only).
    fn delta_choices(&self, which: &[usize]) -> Option<Vec<Vec<(usize, Scalar)>>> {
        let mut out: Vec<Vec<(usize, Scalar)>> = vec![vec![]];
        for &d in which {
            let opts: Vec<Scalar> = match &self.deltas[d].3 {
                Some(f) => vec![f.clone()],
                None => self.alg.field().elements()?,
            };
            out = out
                .into_iter()
                .flat_map(|pre| {
                    opts.iter().map(move |o| {
                        let mut v = pre.clone();
                        v.push((d, o.clone()));
                        v
                    })
                })
                .collect();
        }
        Some(out)
    }

    /// Representative for class `c` under the given `γ` constraints and a
    /// subset of `δ` constraints; `None` if unsolvable, `Err` if undecidable.
    fn solve_class(&self, c: usize, gammas: &[(usize, &Elem)], deltas: &[usize]) -> std::result::Result<Option<Elem>, ()> {
        let choices = self.delta_choices(deltas).ok_or(())?;
        Ok(choices.iter().find_map(|ch| self.solve_with(c, gammas, ch)))
    }

    fn all_deltas(&self) -> Vec<usize> {
        (0..self.deltas.len()).collect()
    }

    /// All classes solvable with a fixed family `w`.
    fn solve_all(&self, ws: &[Elem]) -> std::result::Result<Option<Vec<Elem>>, ()> {
        let gs: Vec<(usize, &Elem)> = ws.iter().enumerate().collect();
        let ds = self.all_deltas();
        let mut reps = Vec::new();
        for c in 0..self.classes.len() {
            match self.solve_class(c, &gs, &ds)? {
                Some(r) => reps.push(r),
                None => return Ok(None),
            }
        }
        Ok(Some(reps))
    }

    fn solution(&self, ws: Vec<Elem>, reps: Vec<Elem>) -> TwoBSolution {
        TwoBSolution {
            w: self.gammas.iter().map(|g| g.0).zip(ws).collect(),
            reps: self
                .classes
                .iter()
                .zip(reps)
                .map(|((x, b, _, _), r)| ClassRep { vertex: *x, arrow: *b, r })
                .collect(),
        }
    }

    /// Every family `w` over a finite field, or `None` beyond the cap.
    fn all_w(&self) -> Option<Vec<Vec<Scalar>>> {
        let elems = self.alg.field().elements()?;
        let d = self.w_dims();
        let qn = (elems.len() as u64).checked_pow(d as u32)?;
        if qn > W_SEARCH_CAP {
            return None;
        }
        Some(
            (0..qn)
                .map(|mut code| {
                    (0..d)
                        .map(|_| {
                            let x = elems[(code % elems.len() as u64) as usize].clone();
                            code /= elems.len() as u64;
                            x
                        })
                        .collect()
                })
                .collect(),
        )
    }

    fn zero_w(&self) -> Vec<Elem> {
        self.gammas.iter().map(|_| self.alg.zero()).collect()
    }

    /// Clause ids explaining a failure, with `δ` clauses checked first.
    fn blame(&self) -> Vec<Clause> {
        let q = self.alg.quiver();
        let classes = 0..self.classes.len();
        let mut out = Vec::new();
        let fails_delta = |ds: &[usize]| classes.clone().any(|c| matches!(self.solve_class(c, &[], ds), Ok(None)));
        if fails_delta(&self.all_deltas()) {
            for d in 0..self.deltas.len() {
                if fails_delta(&[d]) {
                    out.push(Clause::new(format!("2b-ii:{}", q.arrow(self.deltas[d].0).name), false, "no representative".into()));
                }
            }
            if out.is_empty() {
                for (d, ..) in &self.deltas {
                    out.push(Clause::new(format!("2b-ii:{}", q.arrow(*d).name), false, "jointly unsolvable".into()));
                }
            }
            return out;
        }
        let ds = self.all_deltas();
        for (g, (gid, _, basis)) in self.gammas.iter().enumerate() {
            let ok = self.single_gamma_ok(g, basis, &ds);
            if ok == Some(false) {
                out.push(Clause::new(format!("2b-i:{}", q.arrow(*gid).name), false, "no w_γ works".into()));
            }
        }
        if out.is_empty() {
            for (g, ..) in &self.gammas {
                out.push(Clause::new(format!("2b-i:{}", q.arrow(*g).name), false, "jointly unsolvable".into()));
            }
        }
        out
    }

    /// Whether some `w_γ` alone (with all `δ`) makes every class solvable;
    /// `None` if undecidable.
    fn single_gamma_ok(&self, g: usize, basis: &[Elem], ds: &[usize]) -> Option<bool> {
        let alg = self.alg;
        let ws: Vec<Elem> = if basis.is_empty() {
            vec![alg.zero()]
        } else {
            let elems = alg.field().elements()?;
            let qn = (elems.len() as u64).checked_pow(basis.len() as u32)?;
            if qn > W_SEARCH_CAP {
                return None;
            }
            (0..qn)
                .map(|mut code| {
                    basis.iter().fold(alg.zero(), |acc, b| {
                        let c = &elems[(code % elems.len() as u64) as usize];
                        code /= elems.len() as u64;
                        alg.add(&acc, &alg.scale(c, b))
                    })
                })
                .collect()
        };
        for w in &ws {
            let mut all = true;
            for c in 0..self.classes.len() {
                match self.solve_class(c, &[(g, w)], ds) {
                    Ok(Some(_)) => {}
                    Ok(None) => {
                        all = false;
                        break;
                    }
                    Err(()) => return None,
                }
            }
            if all {
                return Some(true);
            }
        }
        Some(false)
    }

    /// Alternating search over `Q`: fix `r` per class, solve for `w`.
    fn alternate(&self) -> Option<(Vec<Elem>, Vec<Elem>)> {
        use rand::{Rng, SeedableRng};
        let alg = self.alg;
        let f = alg.field();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x2b);
        let ds: Vec<(usize, Scalar)> = self.deltas.iter().enumerate().map(|(d, x)| x.3.clone().map(|s| (d, s))).collect::<Option<_>>()?;
        for _ in 0..ALTERNATING_ROUNDS {
            // A random representative per class satisfying the w-free constraints.
            let mut reps = Vec::new();
            for c in 0..self.classes.len() {
                let (cols, rhs) = self.system(c, &[], &ds);
                let base = self.solve_with(c, &[], &ds)?;
                let mut r = base;
                if !cols.is_empty() {
                    let homog = Matrix::from_columns(f, rhs.len(), &cols).kernel();
                    for h in homog {
                        let t = f.from_i64(rng.gen_range(-3..=3));
                        for (k, &i) in self.classes[c].2.iter().enumerate() {
                            r[i] = &r[i] + &(&t * &h[k]);
                        }
                    }
                }
                reps.push(r);
            }
            // Solve r w_γ = r a_γ for every class simultaneously.
            let mut ws = Vec::new();
            for (_, a, basis) in &self.gammas {
                let mut rhs = Vec::new();
                let mut cols: Vec<Vec<Scalar>> = vec![Vec::new(); basis.len()];
                for r in &reps {
                    rhs.extend(alg.mul(r, a));
                    for (j, b) in basis.iter().enumerate() {
                        cols[j].extend(alg.mul(r, b));
                    }
                }
                let w = if basis.is_empty() {
                    rhs.iter().all(Scalar::is_zero).then(|| alg.zero())
                } else {
                    Matrix::from_columns(f, rhs.len(), &cols)
                        .solve(&rhs)
                        .map(|c| basis.iter().zip(&c).fold(alg.zero(), |acc, (b, x)| alg.add(&acc, &alg.scale(x, b))))
                };
                match w {
                    Some(w) => ws.push(w),
                    None => break,
                }
            }
            if ws.len() == self.gammas.len() {
                return Some((ws, reps));
            }
        }
        None
    }
}

/// Condition (2)(b) in the per-class form (2)(b'): a family `(w_γ) ∈ (pJ)^C`
/// and, for every basis class `μ` of `e_xJp/e_xJ²p`, a representative `r`
/// with `r α ⋯ α_{t(γ)} γ = r w_γ` and `r α ⋯ α_{t(δ)} δ ∈ K r α ⋯ α_{s(δ)}`.
pub fn check_2b(alg: &Algebra, p: &Path) -> Result<TwoBOutcome> {
    triangular(alg)?;
    let m = Mast::new(alg, p)?;
    if m.jp(alg).dim() == 0 {
        return Ok(TwoBOutcome {
            verdict: Verdict::Holds,
            clauses: vec![Clause::new("2b".into(), true, "Jp = 0".into())],
            solution: Some(TwoBSolution { w: vec![], reps: vec![] }),
        });
    }
    let tb = TwoB::new(alg, &m)?;
    let holds = |ws: Vec<Elem>, reps: Vec<Elem>| TwoBOutcome {
        verdict: Verdict::Holds,
        clauses: vec![Clause::new("2b".into(), true, "representatives found".into())],
        solution: Some(tb.solution(ws, reps)),
    };
    let unknown = |why: &str| TwoBOutcome {
        verdict: Verdict::Unknown,
        clauses: vec![Clause::new("2b".into(), false, why.into())],
        solution: None,
    };
    let fails = || TwoBOutcome { verdict: Verdict::Fails, clauses: tb.blame(), solution: None };

    match tb.solve_all(&tb.zero_w()) {
        Ok(Some(reps)) => return Ok(holds(tb.zero_w(), reps)),
        Ok(None) => {}
        Err(()) => return Ok(unknown("δ scalars undetermined over an infinite field")),
    }
    if alg.field().is_finite() {
        let Some(all) = tb.all_w() else {
            return Ok(unknown("w search space exceeds cap"));
        };
        let found = all.par_iter().find_map_first(|coords| {
            let ws = tb.w_elems(coords);
            match tb.solve_all(&ws) {
                Ok(Some(reps)) => Some((ws, reps)),
                _ => None,
            }
        });
        return Ok(match found {
            Some((ws, reps)) => holds(ws, reps),
            None => fails(),
        });
    }
    if tb.w_dims() == 0 {
        return Ok(fails());
    }
    let ds = tb.all_deltas();
    if (0..tb.classes.len()).any(|c| matches!(tb.solve_class(c, &[], &ds), Ok(None))) {
        return Ok(fails());
    }
    Ok(match tb.alternate() {
        Some((ws, reps)) => holds(ws, reps),
        None => unknown("alternating search inconclusive"),
    })
}

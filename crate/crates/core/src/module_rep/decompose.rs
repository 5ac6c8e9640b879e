//! Krull-Schmidt decomposition by Fitting splittings.
//!
//! For an endomorphism `y` of `M` with `n = dim M`, `M = ker y^n ⊕ im y^n` as
//! modules. `M` is indecomposable iff `End(M)` is local iff every endomorphism
//! is nilpotent or invertible, so any endomorphism that is neither gives a
//! proper splitting. Over small finite fields every endomorphism is tried,
//! which makes the answer exact. Otherwise `x - λ` is tried for random `x` and
//! every eigenvalue `λ` of `x` in the base field; over the rationals a trace
//! form radical computation first detects `End(M)/rad = K` exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Matrix;
use crate::poly;

use super::{hom_space, is_isomorphic_indec, ModuleMap, Rep, Submodule};

pub const DECOMPOSE_DIM_CAP: usize = 64;
/// Exhaustive search over `End(M)` when it has at most this many elements.
const EXHAUSTIVE_LIMIT: u64 = 4096;
const RANDOM_TRIALS: usize = 200;

#[derive(Clone, Debug)]
pub struct Summand {
    pub rep: Rep,
    /// Summand -> M.
    pub inclusion: ModuleMap,
    /// M -> summand, with `projection ∘ inclusion = id`.
    pub projection: ModuleMap,
}

fn fitting(m: &Rep, y: &ModuleMap) -> Option<(Submodule, Submodule)> {
    let n = m.total_dim();
    let yn = y.pow(n);
    let r = yn.rank();
    if r == 0 || r == n {
        None
    } else {
        Some((yn.kernel_sub(m), yn.image_sub(m)))
    }
}

fn combination(basis: &[ModuleMap], coeffs: &[Scalar], m: &Rep) -> ModuleMap {
    basis
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .fold(ModuleMap::zero(m, m), |acc, (b, c)| acc.add(&b.scale(c)))
}

fn eigenvalues(x: &ModuleMap, field: Field) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = Vec::new();
    for b in &x.blocks {
        if b.rows() == 0 {
            continue;
        }
        for r in poly::roots(&b.char_poly(), field) {
            if !out.contains(&r) {
                out.push(r);
            }
        }
    }
    out
}

fn try_shifts(m: &Rep, x: &ModuleMap) -> Option<(Submodule, Submodule)> {
    if let Some(s) = fitting(m, x) {
        return Some(s);
    }
    let id = ModuleMap::identity(m);
    for lambda in eigenvalues(x, m.field()) {
        if lambda.is_zero() {
            continue;
        }
        let y = x.sub(&id.scale(&lambda));
        if let Some(s) = fitting(m, &y) {
            return Some(s);
        }
    }
    None
}

/// Dimension of `End(M)/rad` over the rationals via the trace form.
fn semisimple_quotient_dim_char0(basis: &[ModuleMap], field: Field) -> usize {
    let k = basis.len();
    let mut gram = Matrix::zeros(field, k, k);
    for i in 0..k {
        for j in i..k {
            let p = basis[i].compose(&basis[j]);
            let mut tr = field.zero();
            for b in &p.blocks {
                for d in 0..b.rows() {
                    tr = &tr + &b[(d, d)];
                }
            }
            gram[(i, j)] = tr.clone();
            gram[(j, i)] = tr;
        }
    }
    gram.rank()
}

fn find_split(m: &Rep) -> Option<(Submodule, Submodule)> {
    let field = m.field();
    let basis = hom_space(m, m);
    if basis.len() <= 1 {
        return None;
    }
    for b in &basis {
        if let Some(s) = try_shifts(m, b) {
            return Some(s);
        }
    }
    match field {
        Field::Prime(q) => {
            let k = basis.len() as u32;
            if (q as f64).powi(k as i32) <= EXHAUSTIVE_LIMIT as f64 {
                let total = q.pow(k);
                for code in 1..total {
                    let mut c = code;
                    let coeffs: Vec<Scalar> = (0..k)
                        .map(|_| {
                            let d = c % q;
                            c /= q;
                            field.from_i64(d as i64)
                        })
                        .collect();
                    let x = combination(&basis, &coeffs, m);
                    if let Some(s) = fitting(m, &x) {
                        return Some(s);
                    }
                }
                return None;
            }
        }
        Field::Rational => {
            if semisimple_quotient_dim_char0(&basis, field) <= 1 {
                return None;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xdec0);
    for _ in 0..RANDOM_TRIALS {
        let coeffs: Vec<Scalar> = (0..basis.len())
            .map(|_| match field {
                Field::Prime(q) => field.from_i64(rng.gen_range(0..q) as i64),
                Field::Rational => field.from_i64(rng.gen_range(-3..=3)),
            })
            .collect();
        let x = combination(&basis, &coeffs, m);
        if let Some(s) = try_shifts(m, &x) {
            return Some(s);
        }
    }
    None
}

fn split_maps(m: &Rep, a: &Submodule, b: &Submodule) -> (Summand, Summand) {
    let (ra, ia) = m.sub_rep(a);
    let (rb, ib) = m.sub_rep(b);
    let mut pa = Vec::new();
    let mut pb = Vec::new();
    for v in 0..m.dims().len() {
        let p = ia.blocks[v].hstack(&ib.blocks[v]);
        let inv = p.inverse().expect("Fitting summands span the module");
        let (da, db) = (ra.dim_at(v), rb.dim_at(v));
        pa.push(inv.block(0, 0, da, m.dim_at(v)));
        pb.push(inv.block(da, 0, db, m.dim_at(v)));
    }
    (
        Summand { rep: ra, inclusion: ia, projection: ModuleMap { blocks: pa } },
        Summand { rep: rb, inclusion: ib, projection: ModuleMap { blocks: pb } },
    )
}

/// Indecomposable summands of `M` with inclusions and projections.
pub fn decompose(m: &Rep) -> Vec<Summand> {
    if m.is_zero() {
        return Vec::new();
    }
    match find_split(m) {
        None => vec![Summand {
            rep: m.clone(),
            inclusion: ModuleMap::identity(m),
            projection: ModuleMap::identity(m),
        }],
        Some((a, b)) => {
            let (sa, sb) = split_maps(m, &a, &b);
            let mut out = Vec::new();
            for s in [sa, sb] {
                for inner in decompose(&s.rep) {
                    out.push(Summand {
                        rep: inner.rep,
                        inclusion: s.inclusion.compose(&inner.inclusion),
                        projection: inner.projection.compose(&s.projection),
                    });
                }
            }
            out
        }
    }
}

pub fn try_decompose(m: &Rep, cap: usize) -> Result<Vec<Summand>> {
    if m.total_dim() > cap {
        return Err(Error::CapExceeded { what: "module dimension", value: m.total_dim(), cap });
    }
    Ok(decompose(m))
}

pub fn is_indecomposable(m: &Rep) -> bool {
    !m.is_zero() && find_split(m).is_none()
}

/// Group indecomposable modules into isomorphism classes with multiplicities.
pub fn group_isoclasses(mods: &[Rep]) -> Vec<(Rep, usize)> {
    let mut classes: Vec<(Rep, usize)> = Vec::new();
    for r in mods {
        match classes.iter_mut().find(|(c, _)| is_isomorphic_indec(c, r)) {
            Some(entry) => entry.1 += 1,
            None => classes.push((r.clone(), 1)),
        }
    }
    classes
}

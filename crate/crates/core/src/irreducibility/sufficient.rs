//! Splitting a test factorization `JU -> V -> U` when (2)(a) and (2)(b) hold.

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::module_rep::{ModuleMap, Rep};
use crate::uniserial::{radical_embedding, UniserialModule};

use super::conditions::{check_2a, check_2b, Mast, TwoBSolution, Verdict};
use super::witness::{map_from_generators, preimage};

#[derive(Clone, Debug)]
pub enum Splitting {
    /// `χ: U -> V` with `ψχ = id_U`.
    Section(ModuleMap),
    /// `χ: V -> JU` with `χφ = id_JU`.
    Retraction(ModuleMap),
}

/// Matrix of `y ↦ r·y` from `V_from` to `V_to`.
fn action_block(alg: &Algebra, v: &Rep, r: &Elem, from: usize, to: usize) -> Matrix {
    let f = v.field();
    let cols: Vec<Vec<Scalar>> = (0..v.dim_at(from))
        .map(|j| {
            let mut c = vec![f.zero(); v.dim_at(from)];
            c[j] = f.one();
            v.component(&v.act_elem(alg, r, &v.embed(from, &c)), to)
        })
        .collect();
    if cols.is_empty() {
        return Matrix::zeros(f, v.dim_at(to), 0);
    }
    Matrix::from_columns(f, v.dim_at(to), &cols)
}

/// `ψ̂_i`: the coefficient of `ψ(y)` along `α_{i-1}⋯α_1 x`, as a row on `V_{v_i}`.
fn psi_hat(u: &UniserialModule, v: &Rep, psi: &ModuleMap, vertex: usize, basis_vec: &[Scalar]) -> Vec<Scalar> {
    let comp = u.rep.component(basis_vec, vertex);
    let k = comp.iter().position(|c| !c.is_zero()).expect("nonzero layer vector");
    let inv = comp[k].inv();
    let block = &psi.blocks[vertex];
    (0..v.dim_at(vertex)).map(|j| &block[(k, j)] * &inv).collect()
}

/// Given `ψφ = ι`, build a section of `ψ` (first case) or a retraction of `φ`
/// (second case) from the representatives found by `check_2b`.
pub fn sufficient_direction(alg: &Algebra, u: &UniserialModule, v: &Rep, phi: &ModuleMap, psi: &ModuleMap) -> Result<Splitting> {
    let m = Mast::new(alg, u.mast())?;
    if m.path.has_repeated_vertex(alg.quiver()) {
        return Err(Error::Hypotheses("mast repeats a vertex".into()));
    }
    if let Some(c) = check_2a(alg, &m).into_iter().find(|c| !c.holds) {
        return Err(Error::Hypotheses(format!("clause {} fails", c.id)));
    }
    let tb = check_2b(alg, u.mast())?;
    let sol: TwoBSolution = match (tb.verdict, tb.solution) {
        (Verdict::Holds, Some(s)) => s,
        _ => return Err(Error::Hypotheses("condition (2)(b) not established".into())),
    };
    let (ju, iota) = radical_embedding(&u.rep);
    if psi.compose(phi) != iota {
        return Err(Error::Hypotheses("ψφ is not the radical embedding".into()));
    }
    let f = alg.field();
    let v1 = m.path.source();
    let layers = u.layer_basis(alg);
    let hat1 = psi_hat(u, v, psi, v1, &layers[0]);
    let d1 = v.dim_at(v1);
    let rp: Vec<(usize, Matrix)> =
        sol.reps.iter().map(|c| (c.vertex, action_block(alg, v, &alg.mul(&c.r, &m.elem), v1, c.vertex))).collect();

    // Case 1: y ∈ V_{v_1} with ψ̂_1(y) = 1 and rp·y = 0 for every r.
    let mut rows = vec![hat1.clone()];
    let mut rhs = vec![f.one()];
    for (_, b) in &rp {
        for i in 0..b.rows() {
            rows.push(b.row(i));
            rhs.push(f.zero());
        }
    }
    if d1 > 0 {
        if let Some(y) = Matrix::from_row_vecs(f, d1, &rows).solve(&rhs) {
            let chi = map_from_generators(&u.rep, &[u.top.clone()], v, &[v.embed(v1, &y)])
                .ok_or_else(|| Error::Verification("section is not well defined".into()))?;
            if psi.compose(&chi) != ModuleMap::identity(&u.rep) {
                return Err(Error::Verification("constructed χ is not a section".into()));
            }
            return Ok(Splitting::Section(chi));
        }
    }

    // Case 2: ψ̂_1 = Σ_r ω_r ∘ (rp·); set χ(y) = (ψ̂_i(y) - Σ_r ω_r(r α_{n-1}⋯α_i y)) u_i.
    let widths: Vec<usize> = rp.iter().map(|(_, b)| b.rows()).collect();
    let total: usize = widths.iter().sum();
    let omega: Vec<Scalar> = if d1 == 0 {
        vec![f.zero(); total]
    } else if total == 0 {
        if hat1.iter().any(|c| !c.is_zero()) {
            return Err(Error::Verification("neither case of the splitting applies".into()));
        }
        vec![]
    } else {
        let mut cols = Vec::new();
        for (_, b) in &rp {
            for i in 0..b.rows() {
                cols.push(b.row(i));
            }
        }
        Matrix::from_columns(f, d1, &cols)
            .solve(&hat1)
            .ok_or_else(|| Error::Verification("neither case of the splitting applies".into()))?
    };
    let q = alg.quiver();
    let mut blocks: Vec<Matrix> = (0..q.num_vertices()).map(|x| Matrix::zeros(f, ju.dim_at(x), v.dim_at(x))).collect();
    for i in 2..=m.n() {
        let vi = m.cls.vertex_at(i);
        let hat = psi_hat(u, v, psi, vi, &layers[i - 1]);
        let tail = alg.path_elem(&m.tail(alg, i));
        let mut row = hat;
        let mut off = 0;
        for ((x, _), (c, w)) in rp.iter().zip(sol.reps.iter().zip(&widths)) {
            let act = action_block(alg, v, &alg.mul(&c.r, &tail), vi, *x);
            for (j, r) in row.iter_mut().enumerate() {
                let mut s = f.zero();
                for k in 0..*w {
                    s = &s + &(&omega[off + k] * &act[(k, j)]);
                }
                *r = &*r - &s;
            }
            off += w;
        }
        let target = preimage(&iota, &ju, &u.rep, &layers[i - 1]).expect("layer vector in JU");
        let t = ju.component(&target, vi);
        let mut b = Matrix::zeros(f, ju.dim_at(vi), v.dim_at(vi));
        for (a, ta) in t.iter().enumerate() {
            for (j, r) in row.iter().enumerate() {
                b[(a, j)] = ta * r;
            }
        }
        blocks[vi] = b;
    }
    let chi = ModuleMap { blocks };
    if !chi.is_homomorphism(v, &ju) || chi.compose(phi) != ModuleMap::identity(&ju) {
        return Err(Error::Verification("constructed χ is not a retraction".into()));
    }
    Ok(Splitting::Retraction(chi))
}

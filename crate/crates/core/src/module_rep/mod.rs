//! Left modules as quiver representations.
//!
//! A [`Rep`] stores one vector space dimension per vertex and one matrix per
//! arrow (target × source). Vectors of the whole module are concatenations of
//! the vertex components in vertex order ("global" coordinates).

mod decompose;
mod hom;
mod ops;

use std::sync::Arc;

use serde::Serialize;

pub use decompose::{decompose, group_isoclasses, is_indecomposable, try_decompose, Summand, DECOMPOSE_DIM_CAP};
pub use hom::{combine, end_algebra_is_local, hom_space, solve_combination, is_isomorphic, is_isomorphic_indec, is_split_epi, is_split_mono};
pub use ops::{cokernel, direct_sum, image, kernel, pullback, pushout, DirectSum};

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, Subspace};
use crate::quiver::{Path, Quiver};

#[derive(Clone, Debug)]
pub struct Rep {
    quiver: Arc<Quiver>,
    field: Field,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Rep {
    fn eq(&self, other: &Rep) -> bool {
        self.field == other.field && self.dims == other.dims && self.maps == other.maps
    }
}

/// One matrix per vertex, from the source module's component to the target's.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMap {
    pub blocks: Vec<Matrix>,
}

/// A submodule, given vertex by vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct Submodule {
    pub parts: Vec<Subspace>,
}

impl Submodule {
    pub fn dim(&self) -> usize {
        self.parts.iter().map(Subspace::dim).sum()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.parts.iter().map(Subspace::dim).collect()
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        Submodule {
            parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a.sum(b)).collect(),
        }
    }

    pub fn intersection(&self, other: &Submodule) -> Submodule {
        Submodule {
            parts: self
                .parts
                .iter()
                .zip(&other.parts)
                .map(|(a, b)| a.intersection(b))
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &Submodule) -> bool {
        self.parts.iter().zip(&other.parts).all(|(a, b)| a.is_subspace_of(b))
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct RepJson {
    pub dims: Vec<usize>,
    pub arrows: Vec<ArrowMatrixJson>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ArrowMatrixJson {
    pub arrow: String,
    pub rows: Vec<Vec<Scalar>>,
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<Scalar>> {
    (0..m.rows()).map(|r| m.row(r)).collect()
}

impl Rep {
    pub fn new(quiver: Arc<Quiver>, field: Field, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Rep> {
        if dims.len() != quiver.num_vertices() || maps.len() != quiver.num_arrows() {
            return Err(Error::Dimension("wrong number of vertex spaces or arrow matrices".into()));
        }
        for (a, m) in maps.iter().enumerate() {
            let ar = quiver.arrow(a);
            if m.rows() != dims[ar.target] || m.cols() != dims[ar.source] || m.field() != field {
                return Err(Error::Dimension(format!(
                    "arrow {} needs a {}x{} matrix over {field}, got {}x{} over {}",
                    ar.name,
                    dims[ar.target],
                    dims[ar.source],
                    m.rows(),
                    m.cols(),
                    m.field()
                )));
            }
        }
        Ok(Rep { quiver, field, dims, maps })
    }

    pub fn zero(quiver: Arc<Quiver>, field: Field) -> Rep {
        let dims = vec![0; quiver.num_vertices()];
        let maps = (0..quiver.num_arrows()).map(|_| Matrix::zeros(field, 0, 0)).collect();
        Rep { quiver, field, dims, maps }
    }

    pub fn simple(quiver: Arc<Quiver>, field: Field, v: usize) -> Rep {
        let mut dims = vec![0; quiver.num_vertices()];
        dims[v] = 1;
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(field, dims[a.target], dims[a.source]))
            .collect();
        Rep { quiver, field, dims, maps }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn quiver_arc(&self) -> Arc<Quiver> {
        self.quiver.clone()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_matrix(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn offset(&self, v: usize) -> usize {
        self.dims[..v].iter().sum()
    }

    pub fn component(&self, x: &[Scalar], v: usize) -> Vec<Scalar> {
        let o = self.offset(v);
        x[o..o + self.dims[v]].to_vec()
    }

    pub fn embed(&self, v: usize, comp: &[Scalar]) -> Vec<Scalar> {
        let mut x = vec![self.field.zero(); self.total_dim()];
        let o = self.offset(v);
        x[o..o + comp.len()].clone_from_slice(comp);
        x
    }

    /// Matrix of a path: arrow matrices multiplied right to left.
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field, self.dims[p.source()]);
        for &a in p.arrows().iter().rev() {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Action of a single path on a global vector.
    pub fn act_path(&self, p: &Path, x: &[Scalar]) -> Vec<Scalar> {
        let comp = self.component(x, p.source());
        let y = self.path_matrix(p).apply(&comp);
        self.embed(p.target(), &y)
    }

    pub fn act_arrow(&self, a: usize, x: &[Scalar]) -> Vec<Scalar> {
        let ar = self.quiver.arrow(a);
        let y = self.maps[a].apply(&self.component(x, ar.source));
        self.embed(ar.target, &y)
    }

    /// Action of an algebra element on a global vector.
    pub fn act_elem(&self, alg: &Algebra, r: &Elem, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.total_dim()];
        for (i, c) in r.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let y = self.act_path(alg.basis_path(i), x);
            crate::linalg::axpy(&mut out, c, &y);
        }
        out
    }

    /// Check every relation; the error names the first violated one.
    pub fn validate(&self, alg: &Algebra) -> Result<()> {
        for rel in alg.relations() {
            let (s, t) = (rel.source(), rel.target());
            let mut acc = Matrix::zeros(self.field, self.dims[t], self.dims[s]);
            for (c, p) in &rel.terms {
                acc = acc.add(&self.path_matrix(p).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::RelationViolated(rel.display(&self.quiver)));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, alg: &Algebra) -> bool {
        self.validate(alg).is_ok()
    }

    pub fn to_json(&self) -> RepJson {
        RepJson {
            dims: self.dims.clone(),
            arrows: self
                .maps
                .iter()
                .enumerate()
                .map(|(a, m)| ArrowMatrixJson { arrow: self.quiver.arrow(a).name.clone(), rows: matrix_rows(m) })
                .collect(),
        }
    }

    pub fn zero_sub(&self) -> Submodule {
        Submodule {
            parts: self.dims.iter().map(|&d| Subspace::zero(self.field, d)).collect(),
        }
    }

    pub fn full_sub(&self) -> Submodule {
        Submodule {
            parts: self.dims.iter().map(|&d| Subspace::full(self.field, d)).collect(),
        }
    }

    /// Smallest submodule containing the given global vectors.
    pub fn generate(&self, gens: &[Vec<Scalar>]) -> Submodule {
        let mut sub = self.zero_sub();
        let mut queue: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for g in gens {
            for v in 0..self.dims.len() {
                let c = self.component(g, v);
                if sub.parts[v].insert(&c) {
                    queue.push((v, c));
                }
            }
        }
        self.close(&mut sub, queue);
        sub
    }

    /// Close a per-vertex family under the arrows.
    pub fn close_sub(&self, mut sub: Submodule) -> Submodule {
        let queue: Vec<(usize, Vec<Scalar>)> = (0..self.dims.len())
            .flat_map(|v| sub.parts[v].basis().iter().map(move |b| (v, b.clone())).collect::<Vec<_>>())
            .collect();
        self.close(&mut sub, queue);
        sub
    }

    fn close(&self, sub: &mut Submodule, mut queue: Vec<(usize, Vec<Scalar>)>) {
        while let Some((v, c)) = queue.pop() {
            for a in self.quiver.arrows_from(v) {
                let t = self.quiver.arrow(a).target;
                let y = self.maps[a].apply(&c);
                if sub.parts[t].insert(&y) {
                    queue.push((t, y));
                }
            }
        }
    }

    pub fn is_submodule(&self, sub: &Submodule) -> bool {
        (0..self.quiver.num_arrows()).all(|a| {
            let ar = self.quiver.arrow(a);
            sub.parts[ar.source]
                .basis()
                .iter()
                .all(|b| sub.parts[ar.target].contains(&self.maps[a].apply(b)))
        })
    }

    /// `JM`: the span of all arrow images.
    pub fn radical(&self) -> Submodule {
        let mut sub = self.zero_sub();
        for a in 0..self.quiver.num_arrows() {
            let t = self.quiver.arrow(a).target;
            for c in self.maps[a].column_space() {
                sub.parts[t].insert(&c);
            }
        }
        sub
    }

    /// `J · sub`.
    pub fn radical_of(&self, sub: &Submodule) -> Submodule {
        let mut out = self.zero_sub();
        for a in 0..self.quiver.num_arrows() {
            let ar = self.quiver.arrow(a);
            for b in sub.parts[ar.source].basis() {
                out.parts[ar.target].insert(&self.maps[a].apply(b));
            }
        }
        out
    }

    /// `soc M`: the joint kernel of all arrows (the arrow ideal is `J`).
    pub fn socle(&self) -> Submodule {
        let mut parts = Vec::new();
        for v in 0..self.dims.len() {
            let outgoing: Vec<usize> = self.quiver.arrows_from(v).collect();
            let mut stacked = Matrix::zeros(self.field, 0, self.dims[v]);
            for a in outgoing {
                stacked = stacked.vstack(&self.maps[a]);
            }
            let k = stacked.kernel();
            parts.push(Subspace::spanned_by(self.field, self.dims[v], &k));
        }
        Submodule { parts }
    }

    /// `M ⊇ JM ⊇ J²M ⊇ ... ⊇ 0`, ending at the first zero term.
    pub fn radical_series(&self) -> Vec<Submodule> {
        let mut out = vec![self.full_sub()];
        loop {
            let next = self.radical_of(out.last().unwrap());
            let done = next.dim() == 0;
            out.push(next);
            if done || out.len() > self.total_dim() + 1 {
                break;
            }
        }
        out
    }

    /// Loewy length: number of nonzero radical layers.
    pub fn loewy_length(&self) -> usize {
        self.radical_series().len() - 1
    }

    pub fn top(&self) -> Rep {
        self.quotient(&self.radical()).0
    }

    pub fn top_dims(&self) -> Vec<usize> {
        let r = self.radical();
        self.dims.iter().zip(r.dims()).map(|(d, r)| d - r).collect()
    }

    /// Every radical layer is simple or zero.
    pub fn is_uniserial(&self) -> bool {
        let series = self.radical_series();
        series.windows(2).all(|w| w[0].dim() - w[1].dim() <= 1)
    }

    pub fn is_simple(&self) -> bool {
        self.total_dim() == 1
    }

    /// Representation of a submodule, with its inclusion map.
    pub fn sub_rep(&self, sub: &Submodule) -> (Rep, ModuleMap) {
        let dims: Vec<usize> = sub.dims();
        let mut maps = Vec::new();
        for a in 0..self.quiver.num_arrows() {
            let ar = self.quiver.arrow(a);
            let (s, t) = (ar.source, ar.target);
            let mut m = Matrix::zeros(self.field, dims[t], dims[s]);
            for (j, b) in sub.parts[s].basis().iter().enumerate() {
                let y = self.maps[a].apply(b);
                let coords = sub.parts[t].coordinates(&y).expect("subspace not closed under arrows");
                for (i, c) in coords.into_iter().enumerate() {
                    m[(i, j)] = c;
                }
            }
            maps.push(m);
        }
        let blocks = (0..self.dims.len())
            .map(|v| Matrix::from_columns(self.field, self.dims[v], sub.parts[v].basis()))
            .collect();
        let rep = Rep { quiver: self.quiver.clone(), field: self.field, dims, maps };
        (rep, ModuleMap { blocks })
    }

    /// `M / sub`, with the projection map.
    pub fn quotient(&self, sub: &Submodule) -> (Rep, ModuleMap) {
        let comps: Vec<Vec<usize>> = sub.parts.iter().map(Subspace::complement_indices).collect();
        let dims: Vec<usize> = comps.iter().map(Vec::len).collect();
        let mut maps = Vec::new();
        for a in 0..self.quiver.num_arrows() {
            let ar = self.quiver.arrow(a);
            let (s, t) = (ar.source, ar.target);
            let mut m = Matrix::zeros(self.field, dims[t], dims[s]);
            for (j, &ci) in comps[s].iter().enumerate() {
                let y = self.maps[a].col(ci);
                let coords = sub.parts[t].quotient_coordinates(&y);
                for (i, c) in coords.into_iter().enumerate() {
                    m[(i, j)] = c;
                }
            }
            maps.push(m);
        }
        let mut blocks = Vec::new();
        for v in 0..self.dims.len() {
            let mut b = Matrix::zeros(self.field, dims[v], self.dims[v]);
            for j in 0..self.dims[v] {
                let mut e = vec![self.field.zero(); self.dims[v]];
                e[j] = self.field.one();
                for (i, c) in sub.parts[v].quotient_coordinates(&e).into_iter().enumerate() {
                    b[(i, j)] = c;
                }
            }
            blocks.push(b);
        }
        let rep = Rep { quiver: self.quiver.clone(), field: self.field, dims, maps };
        (rep, ModuleMap { blocks })
    }

    /// The `K`-dual, a module over the opposite quiver.
    pub fn dual(&self, opposite: Arc<Quiver>) -> Rep {
        let maps = self.maps.iter().map(Matrix::transpose).collect();
        Rep { quiver: opposite, field: self.field, dims: self.dims.clone(), maps }
    }

    /// Change of basis: `P_v` invertible per vertex, new arrow matrices `P_t A P_s^{-1}`.
    pub fn transport(&self, change: &[Matrix]) -> Rep {
        let inv: Vec<Matrix> = change.iter().map(|m| m.inverse().expect("change of basis must be invertible")).collect();
        let maps = (0..self.quiver.num_arrows())
            .map(|a| {
                let ar = self.quiver.arrow(a);
                change[ar.target].mul(&self.maps[a]).mul(&inv[ar.source])
            })
            .collect();
        Rep { quiver: self.quiver.clone(), field: self.field, dims: self.dims.clone(), maps }
    }

    /// The same representation over another (identical-shape) quiver handle.
    pub fn with_quiver(&self, quiver: Arc<Quiver>) -> Rep {
        Rep { quiver, ..self.clone() }
    }
}

impl ModuleMap {
    pub fn zero(from: &Rep, to: &Rep) -> ModuleMap {
        ModuleMap {
            blocks: (0..from.dims.len())
                .map(|v| Matrix::zeros(from.field, to.dims[v], from.dims[v]))
                .collect(),
        }
    }

    pub fn identity(m: &Rep) -> ModuleMap {
        ModuleMap {
            blocks: m.dims.iter().map(|&d| Matrix::identity(m.field, d)).collect(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.mul(b)).collect(),
        }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().map(|m| m.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(Matrix::is_identity)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_invertible(&self) -> bool {
        self.blocks.iter().all(|b| b.rows() == b.cols() && b.rank() == b.rows())
    }

    pub fn is_nilpotent(&self) -> bool {
        let n: usize = self.blocks.iter().map(Matrix::rows).sum();
        self.blocks.iter().all(|b| b.pow(n.max(1)).is_zero())
    }

    pub fn pow(&self, e: usize) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().map(|b| b.pow(e)).collect() }
    }

    /// Whether `self` intertwines the arrow matrices of `from` and `to`.
    pub fn is_homomorphism(&self, from: &Rep, to: &Rep) -> bool {
        (0..from.quiver.num_arrows()).all(|a| {
            let ar = from.quiver.arrow(a);
            to.maps[a].mul(&self.blocks[ar.source]) == self.blocks[ar.target].mul(&from.maps[a])
        })
    }

    /// Apply to a global vector of the source module.
    pub fn apply(&self, from: &Rep, to: &Rep, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(to.total_dim());
        for v in 0..from.dims.len() {
            out.extend(self.blocks[v].apply(&from.component(x, v)));
        }
        out
    }

    /// Global block-diagonal matrix.
    pub fn global(&self, field: Field) -> Matrix {
        let rows: usize = self.blocks.iter().map(Matrix::rows).sum();
        let cols: usize = self.blocks.iter().map(Matrix::cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in &self.blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows();
            c0 += b.cols();
        }
        m
    }

    /// Flatten all entries (used for linear combinations over Hom bases).
    pub fn flatten(&self) -> Vec<Scalar> {
        self.blocks.iter().flat_map(|b| b.data().iter().cloned()).collect()
    }

    pub fn image_sub(&self, to: &Rep) -> Submodule {
        Submodule {
            parts: self
                .blocks
                .iter()
                .zip(&to.dims)
                .map(|(b, &d)| Subspace::spanned_by(to.field, d, &b.column_space()))
                .collect(),
        }
    }

    pub fn kernel_sub(&self, from: &Rep) -> Submodule {
        Submodule {
            parts: self
                .blocks
                .iter()
                .zip(&from.dims)
                .map(|(b, &d)| Subspace::spanned_by(from.field, d, &b.kernel()))
                .collect(),
        }
    }
}

/// An indecomposable projective `Λe_v` together with the coordinate map from
/// algebra elements supported in `Λe_v` to global module vectors.
#[derive(Clone, Debug)]
pub struct Projective {
    pub vertex: usize,
    pub rep: Rep,
    /// `paths[k]` = algebra basis index of the `k`-th global basis vector.
    pub paths: Vec<usize>,
}

impl Projective {
    pub fn new(alg: &Algebra, v: usize) -> Projective {
        let q = alg.quiver_arc();
        let nv = q.num_vertices();
        let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); nv];
        for i in alg.projective_basis(v) {
            by_vertex[alg.basis_path(i).target()].push(i);
        }
        let dims: Vec<usize> = by_vertex.iter().map(Vec::len).collect();
        let paths: Vec<usize> = by_vertex.iter().flatten().copied().collect();
        let mut maps = Vec::new();
        for a in 0..q.num_arrows() {
            let ar = q.arrow(a);
            let mut m = Matrix::zeros(alg.field(), dims[ar.target], dims[ar.source]);
            let ae = alg.arrow_elem(a);
            for (j, &bi) in by_vertex[ar.source].iter().enumerate() {
                let y = alg.mul(&ae, &alg.basis_elem(bi));
                for (i, &ti) in by_vertex[ar.target].iter().enumerate() {
                    m[(i, j)] = y[ti].clone();
                }
            }
            maps.push(m);
        }
        let rep = Rep { quiver: q, field: alg.field(), dims, maps };
        Projective { vertex: v, rep, paths }
    }

    /// Global vector of an element of `Λe_v`; `None` if `x` is not supported there.
    pub fn vector(&self, alg: &Algebra, x: &Elem) -> Option<Vec<Scalar>> {
        let xe = alg.mul(x, &alg.vertex_elem(self.vertex));
        if xe != *x {
            return None;
        }
        Some(self.paths.iter().map(|&i| x[i].clone()).collect())
    }

    /// Algebra element corresponding to a global vector.
    pub fn element(&self, alg: &Algebra, x: &[Scalar]) -> Elem {
        let mut e = alg.zero();
        for (k, &i) in self.paths.iter().enumerate() {
            e[i] = x[k].clone();
        }
        e
    }

    /// The submodule corresponding to a left ideal `L ⊆ Λe_v`.
    pub fn ideal_sub(&self, alg: &Algebra, ideal: &Subspace) -> Submodule {
        let vecs: Vec<Vec<Scalar>> = ideal
            .basis()
            .iter()
            .map(|b| self.vector(alg, b).expect("ideal not inside the projective"))
            .collect();
        self.rep.generate(&vecs)
    }

    /// `Λe_v / L` with the projection.
    pub fn cyclic_quotient(&self, alg: &Algebra, ideal: &Subspace) -> (Rep, ModuleMap) {
        let sub = self.ideal_sub(alg, ideal);
        self.rep.quotient(&sub)
    }
}

pub fn projective(alg: &Algebra, v: usize) -> Rep {
    Projective::new(alg, v).rep
}

/// `D(e_v Λ)`: the indecomposable injective with socle `S_v`.
pub fn injective(alg: &Algebra, v: usize) -> Rep {
    let q = alg.quiver_arc();
    let nv = q.num_vertices();
    // e_v Λ has basis paths ending at v, graded by source; right action of
    // arrow a: e_v Λ e_{t(a)} -> e_v Λ e_{s(a)}. The dual transposes that.
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for i in alg.right_projective_basis(v) {
        by_vertex[alg.basis_path(i).source()].push(i);
    }
    let dims: Vec<usize> = by_vertex.iter().map(Vec::len).collect();
    let mut maps = Vec::new();
    for a in 0..q.num_arrows() {
        let ar = q.arrow(a);
        // right multiplication b -> b·a sends paths sourced at t(a) to paths sourced at s(a)
        let mut right = Matrix::zeros(alg.field(), dims[ar.source], dims[ar.target]);
        let ae = alg.arrow_elem(a);
        for (j, &bi) in by_vertex[ar.target].iter().enumerate() {
            let y = alg.mul(&alg.basis_elem(bi), &ae);
            for (i, &si) in by_vertex[ar.source].iter().enumerate() {
                right[(i, j)] = y[si].clone();
            }
        }
        maps.push(right.transpose());
    }
    Rep { quiver: q, field: alg.field(), dims, maps }
}

pub fn simple(alg: &Algebra, v: usize) -> Rep {
    Rep::simple(alg.quiver_arc(), alg.field(), v)
}

#[cfg(test)]
mod tests;

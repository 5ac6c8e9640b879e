//! Bound quiver algebras `KΓ/I` with a basis of normal paths.
//!
//! The ideal is truncated at a power `J^N` of the arrow ideal that it provably
//! contains, and the quotient `P_{<N} / Ī` is computed by row reduction. Paths
//! are ordered shortest first (ties: lexicographically greater arrow sequence
//! first), and the first nonzero coordinate of every reduced row is its
//! leading path. Leading paths are the non-normal ones. Because leading terms
//! are shortest, the normal form of a path of length `k` only involves normal
//! paths of length at least `k`, which makes `J^k` the span of normal paths of
//! length `>= k`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{is_zero_vec, Matrix, Subspace};
use crate::quiver::{compose, Path, Quiver};

pub const DEFAULT_DEGREE_CAP: usize = 32;
pub const DEFAULT_PATH_CAP: usize = 60_000;

/// A linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, Path)>) -> Relation {
        Relation { terms }
    }

    pub fn monomial(field: Field, p: Path) -> Relation {
        Relation { terms: vec![(field.one(), p)] }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source()
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target()
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|t| t.1.len()).min().unwrap_or(0)
    }

    pub fn max_len(&self) -> usize {
        self.terms.iter().map(|t| t.1.len()).max().unwrap_or(0)
    }

    pub fn display(&self, q: &Quiver) -> String {
        format_terms(q, self.terms.iter().map(|(c, p)| (c.clone(), p.clone())))
    }

    /// Reverse every term (the relation in the opposite quiver).
    pub fn opposite(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), reverse_path(p)))
                .collect(),
        }
    }
}

pub fn reverse_path(p: &Path) -> Path {
    if p.is_stationary() {
        return p.clone();
    }
    let rev: Vec<usize> = p.arrows().iter().rev().copied().collect();
    crate::quiver::raw_path(p.target(), p.source(), rev)
}

fn format_terms<I: Iterator<Item = (Scalar, Path)>>(q: &Quiver, terms: I) -> String {
    let mut out = String::new();
    for (c, p) in terms {
        if c.is_zero() {
            continue;
        }
        let name = q.path_name(&p);
        let neg = c.is_negative();
        let mag = if neg { -&c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag.is_one() {
            out.push_str(&name);
        } else {
            out.push_str(&format!("{mag}*{name}"));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// An element of the algebra: coordinates in the normal-path basis.
pub type Elem = Vec<Scalar>;

type Sparse = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct Algebra {
    quiver: Arc<Quiver>,
    field: Field,
    relations: Vec<Relation>,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    /// Normal form of every path of length below the nilpotency degree.
    nf: HashMap<Path, Sparse>,
    nilpotency: usize,
    /// `prod[i][j]` = normal form of `basis[i] * basis[j]`.
    prod: Vec<Vec<Sparse>>,
}

fn path_key(p: &Path) -> (usize, std::cmp::Reverse<Vec<usize>>, usize) {
    (p.len(), std::cmp::Reverse(p.arrows().to_vec()), p.source())
}

fn longest_path(q: &Quiver) -> usize {
    // Memoized DFS on an acyclic quiver.
    fn go(q: &Quiver, v: usize, memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(x) = memo[v] {
            return x;
        }
        let best = q
            .arrows_from(v)
            .map(|a| 1 + go(q, q.arrow(a).target, memo))
            .max()
            .unwrap_or(0);
        memo[v] = Some(best);
        best
    }
    let mut memo = vec![None; q.num_vertices()];
    (0..q.num_vertices()).map(|v| go(q, v, &mut memo)).max().unwrap_or(0)
}

/// All paths of length at most `maxlen`, deterministic order.
fn enumerate_paths(q: &Quiver, maxlen: usize, cap: usize) -> Result<Vec<Path>> {
    let mut out: Vec<Path> = (0..q.num_vertices()).map(Path::stationary).collect();
    let mut frontier = out.clone();
    for _ in 0..maxlen {
        let mut next = Vec::new();
        for p in &frontier {
            for a in q.arrows_from(p.target()) {
                next.push(p.extend(q, a));
                if out.len() + next.len() > cap {
                    return Err(Error::TooManyPaths(cap));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(out)
}

struct PathSpace {
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    by_target: HashMap<usize, Vec<usize>>,
    by_source: HashMap<usize, Vec<usize>>,
}

impl PathSpace {
    fn new(mut paths: Vec<Path>) -> PathSpace {
        paths.sort_by_key(path_key);
        let index = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut by_target: HashMap<usize, Vec<usize>> = HashMap::new();
        let mut by_source: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, p) in paths.iter().enumerate() {
            by_target.entry(p.target()).or_default().push(i);
            by_source.entry(p.source()).or_default().push(i);
        }
        PathSpace { paths, index, by_target, by_source }
    }

    /// Span of `u ρ v` for all relations, keeping only terms of length `< keep_below`
    /// and products admitted by `admit(len u + len v, ρ)`.
    fn ideal<F>(&self, q: &Quiver, field: Field, rels: &[Relation], keep_below: usize, admit: F) -> Subspace
    where
        F: Fn(usize, &Relation) -> bool,
    {
        let n = self.paths.len();
        let mut sub = Subspace::zero(field, n);
        let none = Vec::new();
        for rel in rels {
            let vs = self.by_target.get(&rel.source()).unwrap_or(&none);
            let us = self.by_source.get(&rel.target()).unwrap_or(&none);
            for &vi in vs {
                let v = &self.paths[vi];
                for &ui in us {
                    let u = &self.paths[ui];
                    if !admit(u.len() + v.len(), rel) {
                        continue;
                    }
                    let mut vec = vec![field.zero(); n];
                    let mut any = false;
                    for (c, t) in &rel.terms {
                        if u.len() + t.len() + v.len() >= keep_below {
                            continue;
                        }
                        let w = compose(q, u, &compose(q, t, v).unwrap()).unwrap();
                        let Some(&k) = self.index.get(&w) else { continue };
                        vec[k] = &vec[k] + c;
                        any = true;
                    }
                    if any {
                        sub.insert(&vec);
                    }
                }
            }
        }
        sub
    }

    /// Least `k <= maxk` with every path of length `k` in `sub`.
    fn nilpotency_in(&self, sub: &Subspace, field: Field, maxk: usize) -> Option<usize> {
        let n = self.paths.len();
        (1..=maxk).find(|&k| {
            self.paths.iter().enumerate().filter(|(_, p)| p.len() == k).all(|(i, _)| {
                let mut e = vec![field.zero(); n];
                e[i] = field.one();
                sub.contains(&e)
            })
        })
    }
}

fn check_relations(q: &Quiver, field: Field, relations: &[Relation]) -> Result<Vec<Relation>> {
    let mut out = Vec::new();
    for (index, rel) in relations.iter().enumerate() {
        let mut combined: Vec<(Scalar, Path)> = Vec::new();
        for (c, p) in &rel.terms {
            if !field.contains(c) {
                return Err(Error::InvalidScalar(format!("{c} is not in {field}")));
            }
            if p.len() < 2 {
                return Err(Error::ShortRelationTerm {
                    index,
                    term: q.path_name(p),
                    len: p.len(),
                });
            }
            match combined.iter_mut().find(|(_, w)| w == p) {
                Some(entry) => entry.0 = &entry.0 + c,
                None => combined.push((c.clone(), p.clone())),
            }
        }
        combined.retain(|(c, _)| !c.is_zero());
        if combined.is_empty() {
            return Err(Error::ZeroRelation { index });
        }
        let (s, t) = (combined[0].1.source(), combined[0].1.target());
        for (_, p) in &combined {
            if p.source() != s || p.target() != t {
                return Err(Error::NonParallelRelation {
                    index,
                    detail: format!(
                        "{} runs {} -> {} but {} runs {} -> {}",
                        q.path_name(&combined[0].1),
                        q.vertex_name(s),
                        q.vertex_name(t),
                        q.path_name(p),
                        q.vertex_name(p.source()),
                        q.vertex_name(p.target())
                    ),
                });
            }
        }
        out.push(Relation { terms: combined });
    }
    Ok(out)
}

pub fn build_algebra(quiver: Quiver, field: Field, relations: Vec<Relation>, degree_cap: usize) -> Result<Algebra> {
    Algebra::build(Arc::new(quiver), field, relations, degree_cap, DEFAULT_PATH_CAP)
}

impl Algebra {
    pub fn build(
        quiver: Arc<Quiver>,
        field: Field,
        relations: Vec<Relation>,
        degree_cap: usize,
        path_cap: usize,
    ) -> Result<Algebra> {
        let q = &*quiver;
        let rels = check_relations(q, field, &relations)?;
        let degree_cap = degree_cap.max(2);

        // An upper bound N0 with J^N0 contained in I.
        let n0 = if !q.has_oriented_cycle() {
            longest_path(q) + 1
        } else {
            let mut found = None;
            for d in 2..=degree_cap {
                let space = PathSpace::new(enumerate_paths(q, d, path_cap)?);
                let sub = space.ideal(q, field, &rels, usize::MAX, |uv, r| uv + r.max_len() <= d);
                if let Some(k) = space.nilpotency_in(&sub, field, d) {
                    found = Some(k);
                    break;
                }
            }
            found.ok_or(Error::NotAdmissible { cap: degree_cap })?
        };

        let space = PathSpace::new(enumerate_paths(q, n0 - 1, path_cap)?);
        let ideal = space.ideal(q, field, &rels, n0, |uv, r| uv + r.min_len() < n0);
        let n = space.nilpotency_in(&ideal, field, n0 - 1).unwrap_or(n0);
        if n > degree_cap {
            return Err(Error::NotAdmissible { cap: degree_cap });
        }

        let pivots: std::collections::HashSet<usize> = ideal.pivots().iter().copied().collect();
        let mut basis: Vec<Path> = space
            .paths
            .iter()
            .enumerate()
            .filter(|(i, p)| !pivots.contains(i) && p.len() < n)
            .map(|(_, p)| p.clone())
            .collect();
        basis.sort_by(|a, b| (a.len(), a.source(), a.arrows()).cmp(&(b.len(), b.source(), b.arrows())));
        let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        let mut nf: HashMap<Path, Sparse> = HashMap::new();
        for (p, &i) in &index {
            nf.insert(p.clone(), vec![(i, field.one())]);
        }
        for (row, &pc) in ideal.basis().iter().zip(ideal.pivots()) {
            let p = &space.paths[pc];
            if p.len() >= n {
                continue;
            }
            let mut comb: Sparse = Vec::new();
            for (j, x) in row.iter().enumerate() {
                if j == pc || x.is_zero() {
                    continue;
                }
                let w = &space.paths[j];
                if w.len() >= n {
                    continue;
                }
                comb.push((index[w], -x));
            }
            comb.sort_by_key(|t| t.0);
            nf.insert(p.clone(), comb);
        }

        let dim = basis.len();
        let mut prod = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let (bi, bj) = (&basis[i], &basis[j]);
                if bi.source() != bj.target() || bi.len() + bj.len() >= n {
                    continue;
                }
                let w = compose(q, bi, bj).unwrap();
                prod[i][j] = nf.get(&w).cloned().unwrap_or_default();
            }
        }

        Ok(Algebra { quiver, field, relations: rels, basis, index, nf, nilpotency: n, prod })
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

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_path(&self, i: usize) -> &Path {
        &self.basis[i]
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Least `N` with `J^N = 0`.
    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    pub fn is_monomial(&self) -> bool {
        self.relations.iter().all(Relation::is_monomial)
    }

    pub fn is_triangular(&self) -> bool {
        !self.quiver.has_oriented_cycle()
    }

    pub fn zero(&self) -> Elem {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        let mut e = self.zero();
        e[i] = self.field.one();
        e
    }

    pub fn vertex_elem(&self, v: usize) -> Elem {
        self.path_elem(&Path::stationary(v))
    }

    pub fn arrow_elem(&self, a: usize) -> Elem {
        self.path_elem(&self.quiver.arrow_path(a))
    }

    /// Normal form of a single path.
    pub fn path_elem(&self, p: &Path) -> Elem {
        let mut e = self.zero();
        if p.len() >= self.nilpotency {
            return e;
        }
        if let Some(comb) = self.nf.get(p) {
            for (i, c) in comb {
                e[*i] = &e[*i] + c;
            }
        }
        e
    }

    /// Normal form of a formal combination of paths.
    pub fn normal_form(&self, terms: &[(Scalar, Path)]) -> Elem {
        let mut e = self.zero();
        for (c, p) in terms {
            let v = self.path_elem(p);
            crate::linalg::axpy(&mut e, c, &v);
        }
        e
    }

    pub fn is_zero_path(&self, p: &Path) -> bool {
        is_zero_vec(&self.path_elem(p))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.prod[i][j] {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, i: usize, j: usize) -> Elem {
        let mut out = self.zero();
        for (k, c) in &self.prod[i][j] {
            out[*k] = c.clone();
        }
        out
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(&self, c: &Scalar, a: &Elem) -> Elem {
        a.iter().map(|x| c * x).collect()
    }

    /// Matrix of left multiplication by `a` on the whole algebra.
    pub fn left_mul_matrix(&self, a: &Elem) -> Matrix {
        let cols: Vec<Elem> = (0..self.dim()).map(|j| self.mul(a, &self.basis_elem(j))).collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Matrix of right multiplication by `a` on the whole algebra.
    pub fn right_mul_matrix(&self, a: &Elem) -> Matrix {
        let cols: Vec<Elem> = (0..self.dim()).map(|j| self.mul(&self.basis_elem(j), a)).collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    pub fn display_elem(&self, a: &Elem) -> String {
        format_terms(
            &self.quiver,
            a.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c.clone(), self.basis[i].clone())),
        )
    }

    /// Indices of basis paths of length `>= k`.
    pub fn radical_power_basis(&self, k: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].len() >= k).collect()
    }

    pub fn radical_power(&self, k: usize) -> Subspace {
        let vecs: Vec<Elem> = self.radical_power_basis(k).into_iter().map(|i| self.basis_elem(i)).collect();
        Subspace::spanned_by(self.field, self.dim(), &vecs)
    }

    /// Basis indices of `e_w Λ e_v`.
    pub fn block(&self, w: usize, v: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].source() == v && self.basis[i].target() == w)
            .collect()
    }

    /// Basis indices of `Λ e_v` (paths starting at `v`).
    pub fn projective_basis(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].source() == v).collect()
    }

    /// Basis indices of `e_v Λ` (paths ending at `v`).
    pub fn right_projective_basis(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].target() == v).collect()
    }

    /// `Σ Λ g_i` as a subspace of `Λ`.
    pub fn left_ideal(&self, gens: &[Elem]) -> Subspace {
        let mut sub = Subspace::zero(self.field, self.dim());
        let mut queue: Vec<Elem> = Vec::new();
        let mut ops: Vec<usize> = (0..self.quiver.num_vertices())
            .filter_map(|v| self.index_of(&Path::stationary(v)))
            .collect();
        ops.extend((0..self.quiver.num_arrows()).filter_map(|a| self.index_of(&self.quiver.arrow_path(a))));
        for g in gens {
            if sub.insert(g) {
                queue.push(g.clone());
            }
        }
        while let Some(x) = queue.pop() {
            for &o in &ops {
                let y = self.mul(&self.basis_elem(o), &x);
                if sub.insert(&y) {
                    queue.push(y);
                }
            }
        }
        sub
    }

    /// `Σ g_i Λ` as a subspace of `Λ`.
    pub fn right_ideal(&self, gens: &[Elem]) -> Subspace {
        let mut sub = Subspace::zero(self.field, self.dim());
        let mut queue: Vec<Elem> = Vec::new();
        let mut ops: Vec<usize> = (0..self.quiver.num_vertices())
            .filter_map(|v| self.index_of(&Path::stationary(v)))
            .collect();
        ops.extend((0..self.quiver.num_arrows()).filter_map(|a| self.index_of(&self.quiver.arrow_path(a))));
        for g in gens {
            if sub.insert(g) {
                queue.push(g.clone());
            }
        }
        while let Some(x) = queue.pop() {
            for &o in &ops {
                let y = self.mul(&x, &self.basis_elem(o));
                if sub.insert(&y) {
                    queue.push(y);
                }
            }
        }
        sub
    }

    pub fn membership(&self, x: &Elem, sub: &Subspace) -> bool {
        sub.contains(x)
    }

    /// `J^k · x` as a subspace, for a single element.
    pub fn radical_times(&self, k: usize, x: &Elem) -> Subspace {
        let vecs: Vec<Elem> = self
            .radical_power_basis(k)
            .into_iter()
            .map(|i| self.mul(&self.basis_elem(i), x))
            .collect();
        Subspace::spanned_by(self.field, self.dim(), &vecs)
    }

    /// `e_x J^k p`, or `J^k p` when no vertex is given.
    fn filtered_radical_times(&self, k: usize, x: &Elem, at: Option<usize>) -> Subspace {
        let vecs: Vec<Elem> = self
            .radical_power_basis(k)
            .into_iter()
            .filter(|&i| at.map_or(true, |v| self.basis[i].target() == v))
            .map(|i| self.mul(&self.basis_elem(i), x))
            .collect();
        Subspace::spanned_by(self.field, self.dim(), &vecs)
    }

    /// Arrows `β` whose classes `βp + J²p` form a basis of `Jp/J²p`
    /// (restricted to `e_x Jp / e_x J²p` when `at_vertex` is given). Arrows are
    /// normed representatives: `β = e_{t(β)} β e_{t(p)}`.
    pub fn jp_mod_j2p_basis(&self, p: &Path, at_vertex: Option<usize>) -> Result<Vec<usize>> {
        let pe = self.path_elem(p);
        if is_zero_vec(&pe) {
            return Err(Error::ZeroPath(self.quiver.path_name(p)));
        }
        let mut acc = self.filtered_radical_times(2, &pe, at_vertex);
        let mut out = Vec::new();
        for a in self.quiver.arrows_from(p.target()) {
            let ar = self.quiver.arrow(a);
            if at_vertex.is_some_and(|v| ar.target != v) {
                continue;
            }
            let ap = self.mul(&self.arrow_elem(a), &pe);
            if acc.insert(&ap) {
                out.push(a);
            }
        }
        Ok(out)
    }

    /// The opposite algebra, built from the reversed quiver and relations.
    pub fn opposite(&self) -> Result<Algebra> {
        let rels: Vec<Relation> = self.relations.iter().map(Relation::opposite).collect();
        Algebra::build(
            Arc::new(self.quiver.opposite()),
            self.field,
            rels,
            self.nilpotency.max(2),
            DEFAULT_PATH_CAP,
        )
    }

    /// Image of `a` under the anti-isomorphism `Λ -> Λ^op` reversing paths.
    pub fn to_opposite(&self, op: &Algebra, a: &Elem) -> Elem {
        let terms: Vec<(Scalar, Path)> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), reverse_path(&self.basis[i])))
            .collect();
        op.normal_form(&terms)
    }
}

/// `Λα` as a module, for an arrow `α`.
pub fn arrow_ideal_module(alg: &Algebra, a: usize) -> crate::module_rep::Rep {
    let proj = crate::module_rep::Projective::new(alg, alg.quiver().arrow(a).source);
    let ideal = alg.left_ideal(&[alg.arrow_elem(a)]);
    proj.rep.sub_rep(&proj.ideal_sub(alg, &ideal)).0
}

/// Whether every `Λα` is uniserial, so that `Je = Σ_{s(α)=e} Λα` writes each
/// `Je` as a sum of uniserial left ideals.
pub fn requires_uniserial_arrow_ideals(alg: &Algebra) -> bool {
    (0..alg.quiver().num_arrows()).all(|a| arrow_ideal_module(alg, a).is_uniserial())
}

/// Least `m` with every `Je` a sum of `m` uniserial modules, when the arrow
/// ideals witness it. Any such sum has at least `dim Je/J²e` terms, which is
/// the number of arrows leaving `e`, so `m` is the maximal out-degree.
pub fn is_left_multiserial(alg: &Algebra) -> Option<usize> {
    if !requires_uniserial_arrow_ideals(alg) {
        return None;
    }
    let q = alg.quiver();
    Some((0..q.num_vertices()).map(|v| q.arrows_from(v).count()).max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn linear3() -> Algebra {
        let q = Quiver::new(&["1", "2", "3"], &[("a1", "1", "2"), ("a2", "2", "3")]).unwrap();
        build_algebra(q, Field::Rational, vec![], DEFAULT_DEGREE_CAP).unwrap()
    }

    pub(crate) fn example_d(field: Field) -> Algebra {
        let q = Quiver::new(
            &["1", "2", "3", "4"],
            &[("a1", "1", "2"), ("a2", "2", "3"), ("d1", "2", "3"), ("b1", "3", "4")],
        )
        .unwrap();
        let d1a1 = q.path_from_names(&["d1", "a1"]).unwrap();
        let a2a1 = q.path_from_names(&["a2", "a1"]).unwrap();
        let rel = Relation::new(vec![(field.one(), d1a1), (field.from_i64(-1), a2a1)]);
        build_algebra(q, field, vec![rel], DEFAULT_DEGREE_CAP).unwrap()
    }

    fn example_a() -> Algebra {
        let f = Field::Rational;
        let q = Quiver::new(
            &["1", "2", "3", "4", "5"],
            &[("a1", "1", "2"), ("g1", "3", "2"), ("g2", "4", "2"), ("b1", "2", "5"), ("b2", "2", "5")],
        )
        .unwrap();
        let p = |n: &[&str]| q.path_from_names(n).unwrap();
        let rels = vec![
            Relation::new(vec![(f.one(), p(&["b1", "a1"])), (f.from_i64(-1), p(&["b2", "a1"]))]),
            Relation::monomial(f, p(&["b1", "g1"])),
            Relation::monomial(f, p(&["b2", "g2"])),
        ];
        build_algebra(q, f, rels, DEFAULT_DEGREE_CAP).unwrap()
    }

    #[test]
    fn hereditary_linear() {
        let a = linear3();
        assert_eq!(a.dim(), 6);
        assert_eq!(a.nilpotency(), 3);
        assert_eq!(a.radical_power_basis(0).len(), 6);
        let j2: Vec<String> = a.radical_power_basis(2).iter().map(|&i| a.quiver().path_name(a.basis_path(i))).collect();
        assert_eq!(j2, vec!["a2*a1"]);
        assert!(a.radical_power_basis(3).is_empty());
    }

    #[test]
    fn example_d_normal_forms() {
        let a = example_d(Field::Rational);
        assert_eq!(a.dim(), 12);
        let q = a.quiver();
        let d1a1 = a.path_elem(&q.path_from_names(&["d1", "a1"]).unwrap());
        assert_eq!(a.display_elem(&d1a1), "a2*a1");
        let b = a.path_elem(&q.path_from_names(&["b1", "d1", "a1"]).unwrap());
        assert_eq!(a.display_elem(&b), "b1*a2*a1");
        let prod = a.mul(&a.arrow_elem(q.arrow_id("d1").unwrap()), &a.arrow_elem(q.arrow_id("a1").unwrap()));
        assert_eq!(prod, d1a1);
        assert!(is_zero_vec(&a.mul(&a.vertex_elem(0), &a.vertex_elem(1))));
    }

    #[test]
    fn example_a_dimension() {
        let a = example_a();
        assert_eq!(a.dim(), 13);
        let q = a.quiver();
        let x = a.path_elem(&q.path_from_names(&["b2", "a1"]).unwrap());
        assert_eq!(a.display_elem(&x), "b1*a1");
    }

    #[test]
    fn ideals_and_jp() {
        let a = example_d(Field::Rational);
        let q = a.quiver();
        let a2a1 = a.path_elem(&q.path_from_names(&["a2", "a1"]).unwrap());
        let ideal = a.left_ideal(&[a2a1.clone()]);
        assert!(ideal.contains(&a.path_elem(&q.path_from_names(&["b1", "a2", "a1"]).unwrap())));
        assert!(a.radical_power(2).contains(&a2a1));
        let e1 = a.left_ideal(&[a.vertex_elem(0)]);
        assert_eq!(e1.dim(), a.projective_basis(0).len());

        let l = linear3();
        let lq = l.quiver();
        let b = l.jp_mod_j2p_basis(&lq.path_from_names(&["a1"]).unwrap(), None).unwrap();
        assert_eq!(b, vec![lq.arrow_id("a2").unwrap()]);
        assert!(l.jp_mod_j2p_basis(&lq.path_from_names(&["a2", "a1"]).unwrap(), None).unwrap().is_empty());
    }

    #[test]
    fn error_paths() {
        let f = Field::Rational;
        let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("g", "1", "3")]).unwrap();
        let ba = q.path_from_names(&["b", "a"]).unwrap();
        let g = q.path_from_names(&["g"]).unwrap();
        let err = build_algebra(
            q.clone(),
            f,
            vec![Relation::new(vec![(f.one(), ba.clone()), (f.from_i64(-1), g)])],
            8,
        )
        .unwrap_err();
        assert!(matches!(err, Error::ShortRelationTerm { .. }));
        let ab_bad = Relation::new(vec![(f.one(), ba.clone()), (f.from_i64(-1), ba.clone())]);
        assert!(matches!(build_algebra(q.clone(), f, vec![ab_bad], 8), Err(Error::ZeroRelation { .. })));

        let loop_q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let e = build_algebra(loop_q.clone(), f, vec![], 6).unwrap_err();
        assert_eq!(e, Error::NotAdmissible { cap: 6 });
        let xx = loop_q.path_from_names(&["x", "x", "x"]).unwrap();
        let alg = build_algebra(loop_q, f, vec![Relation::monomial(f, xx)], 6).unwrap();
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.nilpotency(), 3);
    }

    #[test]
    fn cyclic_with_commutativity() {
        // Two loops x, y at one vertex with xy = yx, x^2 = 0, y^2 = 0: dim 4.
        let f = Field::prime(3).unwrap();
        let q = Quiver::new(&["1"], &[("x", "1", "1"), ("y", "1", "1")]).unwrap();
        let p = |n: &[&str]| q.path_from_names(n).unwrap();
        let rels = vec![
            Relation::new(vec![(f.one(), p(&["x", "y"])), (f.from_i64(-1), p(&["y", "x"]))]),
            Relation::monomial(f, p(&["x", "x"])),
            Relation::monomial(f, p(&["y", "y"])),
        ];
        let a = build_algebra(q, f, rels, 8).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.nilpotency(), 3);
    }

    #[test]
    fn associativity_random() {
        let a = example_d(Field::prime(5).unwrap());
        let f = a.field();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let rand_elem = |rng: &mut ChaCha8Rng| -> Elem { (0..a.dim()).map(|_| f.from_i64(rng.gen_range(0..5))).collect() };
        for _ in 0..200 {
            let (x, y, z) = (rand_elem(&mut rng), rand_elem(&mut rng), rand_elem(&mut rng));
            assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
        }
    }

    #[test]
    fn opposite_round_trip() {
        let a = example_d(Field::Rational);
        let op = a.opposite().unwrap();
        assert_eq!(op.dim(), a.dim());
        let q = a.quiver();
        let x = a.arrow_elem(q.arrow_id("d1").unwrap());
        let y = a.arrow_elem(q.arrow_id("a1").unwrap());
        let lhs = a.to_opposite(&op, &a.mul(&x, &y));
        let rhs = op.mul(&a.to_opposite(&op, &y), &a.to_opposite(&op, &x));
        assert_eq!(lhs, rhs);
    }
}

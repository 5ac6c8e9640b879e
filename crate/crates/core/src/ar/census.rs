use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Matrix;
use crate::module_rep::{is_indecomposable, is_isomorphic_indec, Rep};

/// Candidate representations tried per dimension vector before the census is
/// flagged partial.
pub const DEFAULT_CENSUS_BUDGET: u64 = 1 << 18;

#[derive(Clone, Debug)]
pub struct Census {
    pub modules: Vec<Rep>,
    pub dim_cap: usize,
    /// False when some dimension vector exceeded the budget and was skipped.
    pub exhaustive: bool,
    pub skipped: Vec<Vec<usize>>,
}

impl Census {
    /// Index of the census module isomorphic to `m`.
    pub fn find(&self, m: &Rep) -> Option<usize> {
        self.modules.iter().position(|x| x.dims() == m.dims() && is_isomorphic_indec(x, m))
    }
}

/// All reduced row echelon matrices of the given shape.
fn rref_matrices(field: Field, rows: usize, cols: usize) -> Vec<Matrix> {
    let elems = field.elements().expect("finite field");
    let mut out = Vec::new();
    // choose pivot columns as an increasing sequence
    fn pivots(cols: usize, max: usize, start: usize, cur: &mut Vec<usize>, acc: &mut Vec<Vec<usize>>) {
        acc.push(cur.clone());
        if cur.len() == max {
            return;
        }
        for c in start..cols {
            cur.push(c);
            pivots(cols, max, c + 1, cur, acc);
            cur.pop();
        }
    }
    let mut sets = Vec::new();
    pivots(cols, rows, 0, &mut Vec::new(), &mut sets);
    for piv in sets {
        // free entries: row i, columns > piv[i] that are not pivots
        let free: Vec<(usize, usize)> = piv
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| ((p + 1)..cols).filter(|c| !piv.contains(c)).map(move |c| (i, c)))
            .collect();
        let q = elems.len();
        let total = q.pow(free.len() as u32);
        for code in 0..total {
            let mut m = Matrix::zeros(field, rows, cols);
            for (i, &p) in piv.iter().enumerate() {
                m[(i, p)] = field.one();
            }
            let mut c = code;
            for &(i, j) in &free {
                m[(i, j)] = elems[c % q].clone();
                c /= q;
            }
            out.push(m);
        }
    }
    out
}

fn all_matrices(field: Field, rows: usize, cols: usize) -> Vec<Matrix> {
    let elems = field.elements().expect("finite field");
    let q = elems.len();
    let n = rows * cols;
    (0..q.pow(n as u32))
        .map(|code| {
            let mut c = code;
            let data: Vec<Scalar> = (0..n)
                .map(|_| {
                    let x = elems[c % q].clone();
                    c /= q;
                    x
                })
                .collect();
            Matrix::from_rows(field, rows, cols, data)
        })
        .collect()
}

/// Arrows of a spanning forest of the support, each paired with whether its
/// target is the newly reached vertex.
fn spanning_forest(alg: &Algebra, dims: &[usize]) -> Vec<(usize, bool)> {
    let q = alg.quiver();
    let nv = q.num_vertices();
    let mut seen = vec![false; nv];
    let mut out = Vec::new();
    for root in 0..nv {
        if dims[root] == 0 || seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for (a, ar) in q.arrows().iter().enumerate() {
                if dims[ar.source] == 0 || dims[ar.target] == 0 {
                    continue;
                }
                let other = if ar.source == v && !seen[ar.target] {
                    Some((ar.target, true))
                } else if ar.target == v && !seen[ar.source] {
                    Some((ar.source, false))
                } else {
                    None
                };
                if let Some((w, new_is_target)) = other {
                    seen[w] = true;
                    out.push((a, new_is_target));
                    stack.push(w);
                }
            }
        }
    }
    out
}

fn support_connected(alg: &Algebra, dims: &[usize]) -> bool {
    let support = dims.iter().filter(|&&d| d > 0).count();
    support > 0 && spanning_forest(alg, dims).len() + 1 == support
}

/// A simple submodule outside the radical splits off.
fn obviously_decomposable(m: &Rep) -> bool {
    if m.total_dim() <= 1 {
        return false;
    }
    !m.socle().is_subset_of(&m.radical())
}

fn invariant(m: &Rep) -> (Vec<usize>, Vec<usize>, Vec<Vec<usize>>, Vec<usize>) {
    (
        m.dims().to_vec(),
        m.maps().iter().map(Matrix::rank).collect(),
        m.radical_series().iter().map(|s| s.dims()).collect(),
        m.socle().dims(),
    )
}

fn dimension_vectors(nv: usize, cap: usize) -> Vec<Vec<usize>> {
    fn rec(nv: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == nv {
            out.push(cur.clone());
            return;
        }
        for d in 0..=left {
            cur.push(d);
            rec(nv, left - d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(nv, cap, &mut Vec::new(), &mut out);
    out.retain(|d| d.iter().any(|&x| x > 0));
    out.sort_by_key(|d| (d.iter().sum::<usize>(), d.clone()));
    out
}

/// Number of `r × c` echelon forms: subspaces of `F_q^c` of dimension `<= r`.
fn rref_count(q: u128, r: usize, c: usize) -> u128 {
    let gauss = |n: usize, k: usize| -> u128 {
        let mut num = 1u128;
        let mut den = 1u128;
        for i in 0..k {
            num = num.saturating_mul(q.saturating_pow((n - i) as u32) - 1);
            den = den.saturating_mul(q.saturating_pow((i + 1) as u32) - 1);
        }
        num / den
    };
    (0..=r.min(c)).map(|k| gauss(c, k)).fold(0u128, |a, b| a.saturating_add(b))
}

/// Arrows on the forest use echelon forms: which side, or `None` for all matrices.
fn arrow_kinds(alg: &Algebra, dims: &[usize]) -> Vec<Option<bool>> {
    let forest = spanning_forest(alg, dims);
    (0..alg.quiver().num_arrows())
        .map(|a| forest.iter().find(|(b, _)| *b == a).map(|(_, t)| *t))
        .collect()
}

fn candidate_count(alg: &Algebra, dims: &[usize], kinds: &[Option<bool>]) -> u128 {
    let q = alg.field().size().expect("finite field") as u128;
    alg.quiver()
        .arrows()
        .iter()
        .zip(kinds)
        .map(|(ar, k)| {
            let (r, c) = (dims[ar.target], dims[ar.source]);
            match k {
                Some(true) => rref_count(q, r, c),
                Some(false) => rref_count(q, c, r),
                None => q.saturating_pow((r * c) as u32),
            }
        })
        .fold(1u128, |a, b| a.saturating_mul(b))
}

fn arrow_options(alg: &Algebra, dims: &[usize], kinds: &[Option<bool>]) -> Vec<Vec<Matrix>> {
    let f = alg.field();
    alg.quiver()
        .arrows()
        .iter()
        .zip(kinds)
        .map(|(ar, k)| {
            let (r, c) = (dims[ar.target], dims[ar.source]);
            match k {
                Some(true) => rref_matrices(f, r, c),
                Some(false) => rref_matrices(f, c, r).iter().map(Matrix::transpose).collect(),
                None => all_matrices(f, r, c),
            }
        })
        .collect()
}

fn enumerate_dimension_vector(alg: &Algebra, dims: &[usize], options: &[Vec<Matrix>]) -> Vec<Rep> {
    let counts: Vec<u64> = options.iter().map(|o| o.len() as u64).collect();
    let total: u64 = counts.iter().product();
    let found: Vec<Rep> = (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let mut c = code;
            let maps: Vec<Matrix> = options
                .iter()
                .zip(&counts)
                .map(|(o, &n)| {
                    let m = o[(c % n) as usize].clone();
                    c /= n;
                    m
                })
                .collect();
            let rep = Rep::new(alg.quiver_arc(), alg.field(), dims.to_vec(), maps).ok()?;
            if !rep.is_valid(alg) || obviously_decomposable(&rep) || !is_indecomposable(&rep) {
                return None;
            }
            Some(rep)
        })
        .collect();
    dedupe(found)
}

fn dedupe(mods: Vec<Rep>) -> Vec<Rep> {
    let mut buckets: BTreeMap<_, Vec<Rep>> = BTreeMap::new();
    let mut order = Vec::new();
    for m in mods {
        let key = invariant(&m);
        let bucket = buckets.entry(key.clone()).or_default();
        if !bucket.iter().any(|x| is_isomorphic_indec(x, &m)) {
            bucket.push(m);
            order.push((key, bucket.len() - 1));
        }
    }
    order.into_iter().map(|(k, i)| buckets[&k][i].clone()).collect()
}

/// Indecomposable modules of total dimension `<= dim_cap` up to isomorphism.
/// Arrows on a spanning forest of the support run over echelon forms only,
/// which every isomorphism class meets.
pub fn census_indecomposables(alg: &Algebra, dim_cap: usize, budget: u64) -> Result<Census> {
    if !alg.field().is_finite() {
        return Err(Error::InfiniteField);
    }
    let mut modules = Vec::new();
    let mut skipped = Vec::new();
    for dims in dimension_vectors(alg.quiver().num_vertices(), dim_cap) {
        if !support_connected(alg, &dims) {
            continue;
        }
        let kinds = arrow_kinds(alg, &dims);
        if candidate_count(alg, &dims, &kinds) > budget as u128 {
            skipped.push(dims);
            continue;
        }
        let options = arrow_options(alg, &dims, &kinds);
        modules.extend(enumerate_dimension_vector(alg, &dims, &options));
    }
    Ok(Census { modules, dim_cap, exhaustive: skipped.is_empty(), skipped })
}

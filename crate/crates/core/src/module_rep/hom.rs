use crate::linalg::Matrix;

use super::{ModuleMap, Rep};

/// Basis of `Hom(M, N)` from the kernel of the intertwining system
/// `N_a Φ_{s(a)} = Φ_{t(a)} M_a`.
pub fn hom_space(m: &Rep, n: &Rep) -> Vec<ModuleMap> {
    let f = m.field();
    let nv = m.dims().len();
    let mut offsets = Vec::with_capacity(nv);
    let mut unknowns = 0;
    for v in 0..nv {
        offsets.push(unknowns);
        unknowns += n.dim_at(v) * m.dim_at(v);
    }
    if unknowns == 0 {
        return Vec::new();
    }
    // unknown index of Φ_v[i][j]
    let var = |v: usize, i: usize, j: usize| offsets[v] + i * m.dim_at(v) + j;
    let q = m.quiver();
    let mut rows: Vec<Vec<crate::field::Scalar>> = Vec::new();
    for a in 0..q.num_arrows() {
        let ar = q.arrow(a);
        let (s, t) = (ar.source, ar.target);
        let (na, ma) = (n.arrow_matrix(a), m.arrow_matrix(a));
        for i in 0..n.dim_at(t) {
            for j in 0..m.dim_at(s) {
                let mut row = vec![f.zero(); unknowns];
                // (N_a Φ_s)_{ij} = Σ_k N_a[i,k] Φ_s[k,j]
                for k in 0..n.dim_at(s) {
                    let c = &na[(i, k)];
                    if !c.is_zero() {
                        let x = var(s, k, j);
                        row[x] = &row[x] + c;
                    }
                }
                // -(Φ_t M_a)_{ij} = -Σ_k Φ_t[i,k] M_a[k,j]
                for k in 0..m.dim_at(t) {
                    let c = &ma[(k, j)];
                    if !c.is_zero() {
                        let x = var(t, i, k);
                        row[x] = &row[x] - c;
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = Matrix::from_row_vecs(f, unknowns, &rows);
    let kernel = if rows.is_empty() {
        (0..unknowns)
            .map(|k| {
                let mut e = vec![f.zero(); unknowns];
                e[k] = f.one();
                e
            })
            .collect()
    } else {
        sys.kernel()
    };
    kernel
        .into_iter()
        .map(|x| ModuleMap {
            blocks: (0..nv)
                .map(|v| {
                    let (r, c) = (n.dim_at(v), m.dim_at(v));
                    Matrix::from_rows(f, r, c, x[offsets[v]..offsets[v] + r * c].to_vec())
                })
                .collect(),
        })
        .collect()
}

/// Solve `Σ c_i maps[i] = target` for the coefficients.
pub fn solve_combination(maps: &[ModuleMap], target: &ModuleMap) -> Option<Vec<crate::field::Scalar>> {
    let t = target.flatten();
    let f = target.blocks.first()?.field();
    if t.is_empty() {
        return Some(vec![f.zero(); maps.len()]);
    }
    if maps.is_empty() {
        return if t.iter().all(|s| s.is_zero()) { Some(vec![]) } else { None };
    }
    let cols: Vec<Vec<crate::field::Scalar>> = maps.iter().map(ModuleMap::flatten).collect();
    Matrix::from_columns(f, t.len(), &cols).solve(&t)
}

pub fn combine(basis: &[ModuleMap], coeffs: &[crate::field::Scalar], zero: ModuleMap) -> ModuleMap {
    basis.iter().zip(coeffs).fold(zero, |acc, (b, c)| acc.add(&b.scale(c)))
}

/// Whether `φ: M -> N` has a retraction `χ` (`χφ = id_M`); returns it.
pub fn is_split_mono(phi: &ModuleMap, m: &Rep, n: &Rep) -> Option<ModuleMap> {
    if m.is_zero() {
        return Some(ModuleMap::zero(n, m));
    }
    let basis = hom_space(n, m);
    let products: Vec<ModuleMap> = basis.iter().map(|h| h.compose(phi)).collect();
    let coeffs = solve_combination(&products, &ModuleMap::identity(m))?;
    Some(combine(&basis, &coeffs, ModuleMap::zero(n, m)))
}

/// Whether `φ: M -> N` has a section `χ` (`φχ = id_N`); returns it.
pub fn is_split_epi(phi: &ModuleMap, m: &Rep, n: &Rep) -> Option<ModuleMap> {
    if n.is_zero() {
        return Some(ModuleMap::zero(n, m));
    }
    let basis = hom_space(n, m);
    let products: Vec<ModuleMap> = basis.iter().map(|h| phi.compose(h)).collect();
    let coeffs = solve_combination(&products, &ModuleMap::identity(n))?;
    Some(combine(&basis, &coeffs, ModuleMap::zero(n, m)))
}

/// Isomorphism test for indecomposable modules: `M ≅ N` iff some product
/// `g_j f_i` of Hom basis elements is not nilpotent (the endomorphism ring of
/// an indecomposable is local, so a non-nilpotent endomorphism is invertible).
pub fn is_isomorphic_indec(m: &Rep, n: &Rep) -> bool {
    if m.dims() != n.dims() {
        return false;
    }
    if m.is_zero() {
        return true;
    }
    let fs = hom_space(m, n);
    if fs.is_empty() {
        return false;
    }
    let gs = hom_space(n, m);
    for f in &fs {
        for g in &gs {
            if !g.compose(f).is_nilpotent() {
                return true;
            }
        }
    }
    false
}

/// General isomorphism test via Krull-Schmidt decompositions.
pub fn is_isomorphic(m: &Rep, n: &Rep) -> bool {
    if m.dims() != n.dims() {
        return false;
    }
    let dm = super::decompose(m);
    let dn = super::decompose(n);
    if dm.len() != dn.len() {
        return false;
    }
    let mut used = vec![false; dn.len()];
    'outer: for a in &dm {
        for (j, b) in dn.iter().enumerate() {
            if !used[j] && is_isomorphic_indec(&a.rep, &b.rep) {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Whether `End(M)` is local, decided exactly when cheap (see `decompose`).
pub fn end_algebra_is_local(m: &Rep) -> bool {
    super::is_indecomposable(m)
}

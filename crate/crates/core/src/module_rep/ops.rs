use crate::linalg::{Matrix, Subspace};

use super::{ModuleMap, Rep, Submodule};

/// `M_1 ⊕ ... ⊕ M_k` with inclusions and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub rep: Rep,
    pub inclusions: Vec<ModuleMap>,
    pub projections: Vec<ModuleMap>,
}

pub fn direct_sum(parts: &[&Rep]) -> DirectSum {
    let first = parts[0];
    let (q, f) = (first.quiver_arc(), first.field());
    let nv = q.num_vertices();
    let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dim_at(v)).sum()).collect();
    let mut maps = Vec::new();
    for a in 0..q.num_arrows() {
        let ar = q.arrow(a);
        let mut m = Matrix::zeros(f, dims[ar.target], dims[ar.source]);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            m.set_block(r0, c0, p.arrow_matrix(a));
            r0 += p.dim_at(ar.target);
            c0 += p.dim_at(ar.source);
        }
        maps.push(m);
    }
    let rep = Rep::new(q, f, dims.clone(), maps).expect("direct sum shapes");
    let mut inclusions = Vec::new();
    let mut projections = Vec::new();
    let mut offs = vec![0usize; nv];
    for p in parts {
        let mut inc = Vec::new();
        let mut pro = Vec::new();
        for v in 0..nv {
            let mut i = Matrix::zeros(f, dims[v], p.dim_at(v));
            for k in 0..p.dim_at(v) {
                i[(offs[v] + k, k)] = f.one();
            }
            pro.push(i.transpose());
            inc.push(i);
            offs[v] += p.dim_at(v);
        }
        inclusions.push(ModuleMap { blocks: inc });
        projections.push(ModuleMap { blocks: pro });
    }
    DirectSum { rep, inclusions, projections }
}

/// Kernel of `φ: M -> N` as a module with its inclusion into `M`.
pub fn kernel(phi: &ModuleMap, m: &Rep) -> (Rep, ModuleMap) {
    m.sub_rep(&phi.kernel_sub(m))
}

/// Image of `φ: M -> N` as a module with its inclusion into `N`.
pub fn image(phi: &ModuleMap, n: &Rep) -> (Rep, ModuleMap) {
    n.sub_rep(&phi.image_sub(n))
}

/// Cokernel of `φ: M -> N` with the projection from `N`.
pub fn cokernel(phi: &ModuleMap, n: &Rep) -> (Rep, ModuleMap) {
    n.quotient(&phi.image_sub(n))
}

/// Pushout of `f: A -> B` and `g: A -> C`: `(B ⊕ C) / {(f a, -g a)}`,
/// returned with the maps `B -> P` and `C -> P`.
pub fn pushout(f: &ModuleMap, g: &ModuleMap, a: &Rep, b: &Rep, c: &Rep) -> (Rep, ModuleMap, ModuleMap) {
    let ds = direct_sum(&[b, c]);
    let mut sub = ds.rep.zero_sub();
    for v in 0..a.dims().len() {
        for j in 0..a.dim_at(v) {
            let mut col = f.blocks[v].col(j);
            col.extend(g.blocks[v].col(j).iter().map(|x| -x));
            sub.parts[v].insert(&col);
        }
    }
    let (p, proj) = ds.rep.quotient(&sub);
    let fb = proj.compose(&ds.inclusions[0]);
    let gc = proj.compose(&ds.inclusions[1]);
    (p, fb, gc)
}

/// Pullback of `f: B -> D` and `g: C -> D`: `{(b, c) : f b = g c}`,
/// returned with the projections to `B` and `C`.
pub fn pullback(f: &ModuleMap, g: &ModuleMap, b: &Rep, c: &Rep) -> (Rep, ModuleMap, ModuleMap) {
    let ds = direct_sum(&[b, c]);
    let field = b.field();
    let mut parts = Vec::new();
    for v in 0..b.dims().len() {
        let diff = f.blocks[v].hstack(&g.blocks[v].scale(&field.from_i64(-1)));
        let k = diff.kernel();
        parts.push(Subspace::spanned_by(field, ds.rep.dim_at(v), &k));
    }
    let sub = Submodule { parts };
    let (pb, inc) = ds.rep.sub_rep(&sub);
    let pb_b = ds.projections[0].compose(&inc);
    let pb_c = ds.projections[1].compose(&inc);
    (pb, pb_b, pb_c)
}

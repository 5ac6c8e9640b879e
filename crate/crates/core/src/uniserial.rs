//! Masts, the variety `V_p`, the map `Φ_p`, and uniserial modules built from
//! points or from the `f_δ` scalars of a triangular algebra.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{is_zero_vec, Matrix, Subspace};
use crate::module_rep::{ModuleMap, Projective, Rep};
use crate::quiver::{classify_arrows, detours, minimal_non_routes, Detour, Path};

pub const VARIETY_COORD_CAP: usize = 16;
/// Upper bound on `q^N` candidate points tried by [`enumerate_variety`].
pub const VARIETY_POINT_CAP: u64 = 1 << 22;

/// A mast with scalars `k_i(α, u)`, one vector per detour in the order
/// returned by [`detours`].
#[derive(Clone, Debug, PartialEq)]
pub struct UniserialPoint {
    pub mast: Path,
    pub detours: Vec<Detour>,
    pub scalars: Vec<Vec<Scalar>>,
}

impl UniserialPoint {
    pub fn new(alg: &Algebra, mast: &Path, scalars: Vec<Vec<Scalar>>) -> Result<UniserialPoint> {
        let ds = detours(alg.quiver(), mast);
        if ds.len() != scalars.len() || ds.iter().zip(&scalars).any(|(d, k)| d.v_family.len() != k.len()) {
            return Err(Error::Dimension(format!(
                "point needs {} coordinates grouped as {:?}",
                ds.iter().map(|d| d.v_family.len()).sum::<usize>(),
                ds.iter().map(|d| d.v_family.len()).collect::<Vec<_>>()
            )));
        }
        Ok(UniserialPoint { mast: mast.clone(), detours: ds, scalars })
    }

    /// The point with every coordinate equal to `c`.
    pub fn constant(alg: &Algebra, mast: &Path, c: &Scalar) -> UniserialPoint {
        let ds = detours(alg.quiver(), mast);
        let scalars = ds.iter().map(|d| vec![c.clone(); d.v_family.len()]).collect();
        UniserialPoint { mast: mast.clone(), detours: ds, scalars }
    }

    pub fn num_coordinates(&self) -> usize {
        self.scalars.iter().map(Vec::len).sum()
    }

    pub fn flat(&self) -> Vec<Scalar> {
        self.scalars.iter().flatten().cloned().collect()
    }

    fn from_flat(mast: &Path, ds: &[Detour], flat: &[Scalar]) -> UniserialPoint {
        let mut it = flat.iter().cloned();
        let scalars = ds.iter().map(|d| (0..d.v_family.len()).map(|_| it.next().unwrap()).collect()).collect();
        UniserialPoint { mast: mast.clone(), detours: ds.to_vec(), scalars }
    }

    /// Human-readable coordinates `k_i(α,u)=c`.
    pub fn labels(&self, alg: &Algebra) -> Vec<(String, Scalar)> {
        let q = alg.quiver();
        let mut out = Vec::new();
        for (d, ks) in self.detours.iter().zip(&self.scalars) {
            for (i, k) in ks.iter().enumerate() {
                out.push((format!("k{}{}", i + 1, d.label(q)), k.clone()));
            }
        }
        out
    }
}

/// A uniserial module with a fixed mast and top element.
#[derive(Clone, Debug)]
pub struct UniserialModule {
    pub point: UniserialPoint,
    pub rep: Rep,
    /// Global vector of the top element `x`.
    pub top: Vec<Scalar>,
}

impl UniserialModule {
    pub fn mast(&self) -> &Path {
        &self.point.mast
    }

    /// Wrap an arbitrary representation as a uniserial module with mast `p`,
    /// choosing a basis vector at `s(p)` as top element.
    pub fn from_rep(alg: &Algebra, rep: Rep, mast: &Path) -> Result<UniserialModule> {
        rep.validate(alg)?;
        if !rep.is_uniserial() {
            return Err(Error::NotUniserial("radical layers are not simple".into()));
        }
        if rep.total_dim() != mast.len() + 1 {
            return Err(Error::NotUniserial(format!(
                "length {} does not match mast {}",
                rep.total_dim(),
                alg.quiver().path_name(mast)
            )));
        }
        let s = mast.source();
        let top = (0..rep.dim_at(s))
            .map(|i| {
                let mut c = vec![rep.field().zero(); rep.dim_at(s)];
                c[i] = rep.field().one();
                rep.embed(s, &c)
            })
            .find(|x| !is_zero_vec(&rep.act_path(mast, x)))
            .ok_or_else(|| Error::NotUniserial(format!("{} acts as zero", alg.quiver().path_name(mast))))?;
        let scalars = read_scalars(alg, &rep, mast, &top)?;
        let point = UniserialPoint::new(alg, mast, scalars)?;
        Ok(UniserialModule { point, rep, top })
    }

    /// `u x` for each right subpath `u` of the mast, shortest first; these
    /// form a basis adapted to the radical series.
    pub fn layer_basis(&self, alg: &Algebra) -> Vec<Vec<Scalar>> {
        self.mast()
            .right_subpaths(alg.quiver())
            .iter()
            .map(|u| self.rep.act_path(u, &self.top))
            .collect()
    }

    /// The projective cover `Λe(1) -> U`, `e(1) ↦ x`.
    pub fn cover(&self, alg: &Algebra) -> (Projective, ModuleMap) {
        let proj = Projective::new(alg, self.mast().source());
        let map = cyclic_map(alg, &proj, &self.rep, &self.top);
        (proj, map)
    }
}

/// The homomorphism `Λe_v -> M` sending `e_v` to `x`.
pub fn cyclic_map(alg: &Algebra, proj: &Projective, m: &Rep, x: &[Scalar]) -> ModuleMap {
    let f = m.field();
    let nv = alg.quiver().num_vertices();
    let mut blocks: Vec<Matrix> = (0..nv).map(|v| Matrix::zeros(f, m.dim_at(v), proj.rep.dim_at(v))).collect();
    let mut col_at = vec![0usize; nv];
    for &bi in &proj.paths {
        let path = alg.basis_path(bi);
        let v = path.target();
        let y = m.component(&m.act_path(path, x), v);
        for (r, c) in y.into_iter().enumerate() {
            blocks[v][(r, col_at[v])] = c;
        }
        col_at[v] += 1;
    }
    ModuleMap { blocks }
}

/// Measured detour scalars: `αu x = Σ k_i v_i x`.
pub fn read_scalars(alg: &Algebra, rep: &Rep, mast: &Path, top: &[Scalar]) -> Result<Vec<Vec<Scalar>>> {
    let q = alg.quiver();
    let mut out = Vec::new();
    for d in detours(q, mast) {
        let lhs = rep.act_path(&d.path(q), top);
        let cols: Vec<Vec<Scalar>> = d.v_family.iter().map(|v| rep.act_path(v, top)).collect();
        let m = Matrix::from_columns(rep.field(), rep.total_dim(), &cols);
        let k = m
            .solve(&lhs)
            .ok_or_else(|| Error::NotUniserial(format!("{} x is not in the span of V", q.path_name(&d.path(q)))))?;
        out.push(k);
    }
    Ok(out)
}

/// `U_k ⊆ Λe(1)` as a left ideal of `Λ`.
pub fn u_k_submodule(alg: &Algebra, point: &UniserialPoint) -> Result<Subspace> {
    let q = alg.quiver();
    let p = &point.mast;
    if alg.is_zero_path(p) {
        return Err(Error::ZeroPath(q.path_name(p)));
    }
    let mut gens: Vec<Elem> = Vec::new();
    for (d, ks) in point.detours.iter().zip(&point.scalars) {
        let mut g = alg.path_elem(&d.path(q));
        for (v, k) in d.v_family.iter().zip(ks) {
            g = alg.sub(&g, &alg.scale(k, &alg.path_elem(v)));
        }
        gens.push(g);
    }
    for nr in minimal_non_routes(q, p) {
        gens.push(alg.path_elem(&nr));
    }
    Ok(alg.left_ideal(&gens))
}

/// `Φ_p(k) = Λe(1)/U_k`, rejected unless it is uniserial of length
/// `len(p) + 1` with `p x ≠ 0`.
pub fn phi_p(alg: &Algebra, point: &UniserialPoint) -> Result<UniserialModule> {
    let q = alg.quiver();
    let p = &point.mast;
    let uk = u_k_submodule(alg, point)?;
    let proj = Projective::new(alg, p.source());
    let (rep, pi) = proj.cyclic_quotient(alg, &uk);
    let e = proj.vector(alg, &alg.vertex_elem(p.source())).expect("e(1) lies in Λe(1)");
    let top = pi.apply(&proj.rep, &rep, &e);
    if is_zero_vec(&rep.act_path(p, &top)) {
        return Err(Error::NotInVariety(format!("{} x = 0", q.path_name(p))));
    }
    if rep.total_dim() != p.len() + 1 || !rep.is_uniserial() {
        return Err(Error::NotInVariety(format!(
            "quotient has dimension {} and is {}uniserial",
            rep.total_dim(),
            if rep.is_uniserial() { "" } else { "not " }
        )));
    }
    Ok(UniserialModule { point: point.clone(), rep, top })
}

/// All points of `V_p` over a finite field.
pub fn enumerate_variety(alg: &Algebra, p: &Path, coord_cap: usize) -> Result<Vec<UniserialPoint>> {
    let field = alg.field();
    let size = match field {
        Field::Prime(q) => q,
        Field::Rational => return Err(Error::InfiniteField),
    };
    if alg.is_zero_path(p) {
        return Err(Error::ZeroPath(alg.quiver().path_name(p)));
    }
    let ds = detours(alg.quiver(), p);
    let n: usize = ds.iter().map(|d| d.v_family.len()).sum();
    if n > coord_cap {
        return Err(Error::CapExceeded { what: "variety coordinates", value: n, cap: coord_cap });
    }
    let total = (size as u128).pow(n as u32);
    if total > VARIETY_POINT_CAP as u128 {
        return Err(Error::CapExceeded {
            what: "variety candidate points",
            value: total.min(usize::MAX as u128) as usize,
            cap: VARIETY_POINT_CAP as usize,
        });
    }
    let elems = field.elements().expect("finite field");
    let mut found: Vec<(u64, UniserialPoint)> = (0..total as u64)
        .into_par_iter()
        .filter_map(|code| {
            let mut c = code;
            let flat: Vec<Scalar> = (0..n)
                .map(|_| {
                    let d = (c % size) as usize;
                    c /= size;
                    elems[d].clone()
                })
                .collect();
            let pt = UniserialPoint::from_flat(p, &ds, &flat);
            phi_p(alg, &pt).ok().map(|_| (code, pt))
        })
        .collect();
    found.sort_by_key(|(c, _)| *c);
    Ok(found.into_iter().map(|(_, p)| p).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MastStatus {
    Verified,
    Candidate,
}

/// A realizing point for the mast, if one is found by the field's strategy.
pub fn find_point(alg: &Algebra, p: &Path, coord_cap: usize) -> Option<UniserialPoint> {
    let f = alg.field();
    for c in [f.zero(), f.one()] {
        let pt = UniserialPoint::constant(alg, p, &c);
        if phi_p(alg, &pt).is_ok() {
            return Some(pt);
        }
    }
    if f.is_finite() {
        if let Ok(mut pts) = enumerate_variety(alg, p, coord_cap) {
            if !pts.is_empty() {
                return Some(pts.swap_remove(0));
            }
        }
    }
    None
}

/// Nonzero paths of length `<= maxlen` with their mast status.
pub fn masts(alg: &Algebra, maxlen: usize) -> Vec<(Path, MastStatus)> {
    let q = alg.quiver();
    let mut paths: Vec<Path> = (0..q.num_vertices())
        .flat_map(|v| q.paths_from(v, maxlen))
        .filter(|p| !alg.is_zero_path(p))
        .collect();
    paths.sort_by(|a, b| (a.len(), a.source(), a.arrows()).cmp(&(b.len(), b.source(), b.arrows())));
    paths
        .into_par_iter()
        .map(|p| {
            let st = if find_point(alg, &p, VARIETY_COORD_CAP).is_some() {
                MastStatus::Verified
            } else {
                MastStatus::Candidate
            };
            (p, st)
        })
        .collect()
}

/// The uniserial module over a triangular algebra with `K` at every mast
/// vertex, identity maps along the mast, and `f_δ` for arrows in `D`.
/// Arrows of `D` missing from `fdelta` act as zero.
pub fn from_mast_and_fdelta(alg: &Algebra, p: &Path, fdelta: &[(usize, Scalar)]) -> Result<UniserialModule> {
    let q = alg.quiver();
    if !alg.is_triangular() {
        return Err(Error::Unsupported("f_δ parametrization needs a triangular algebra".into()));
    }
    let cls = classify_arrows(q, p)?;
    for (a, _) in fdelta {
        if !cls.d.contains(a) {
            return Err(Error::Hypotheses(format!("{} is not an arrow of D", q.arrow(*a).name)));
        }
    }
    let f = alg.field();
    let nv = q.num_vertices();
    let mut dims = vec![0usize; nv];
    for &v in &cls.mast_vertices {
        dims[v] = 1;
    }
    let mut maps: Vec<Matrix> = q
        .arrows()
        .iter()
        .map(|ar| Matrix::zeros(f, dims[ar.target], dims[ar.source]))
        .collect();
    for &a in &cls.mast_arrows {
        maps[a][(0, 0)] = f.one();
    }
    for (a, c) in fdelta {
        maps[*a][(0, 0)] = c.clone();
    }
    let rep = Rep::new(alg.quiver_arc(), f, dims, maps)?;
    rep.validate(alg)?;
    let top = rep.embed(p.source(), &[f.one()]);
    let scalars = read_scalars(alg, &rep, p, &top)?;
    let point = UniserialPoint::new(alg, p, scalars)?;
    Ok(UniserialModule { point, rep, top })
}

/// `f_δ(1)` read off a uniserial module over a triangular algebra, for every
/// `δ ∈ D`: `δ u_i x = f_δ u_j x` with `u_i` ending at `s(δ)`, `u_j` at `t(δ)`.
pub fn fdelta_of(alg: &Algebra, u: &UniserialModule) -> Result<Vec<(usize, Scalar)>> {
    let q = alg.quiver();
    let cls = classify_arrows(q, u.mast())?;
    let layers = u.layer_basis(alg);
    let mut out = Vec::new();
    for &d in &cls.d {
        let ar = q.arrow(d);
        let i = cls.position(ar.source).unwrap() - 1;
        let j = cls.position(ar.target).unwrap() - 1;
        let y = u.rep.act_arrow(d, &layers[i]);
        let m = Matrix::from_columns(u.rep.field(), u.rep.total_dim(), &[layers[j].clone()]);
        let c = m
            .solve(&y)
            .ok_or_else(|| Error::NotUniserial(format!("{} leaves the mast layers", ar.name)))?;
        out.push((d, c[0].clone()));
    }
    Ok(out)
}

/// The radical `JU` with its inclusion into `U`.
pub fn radical_embedding(u: &Rep) -> (Rep, ModuleMap) {
    u.sub_rep(&u.radical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::module_rep::is_isomorphic_indec;

    fn path(alg: &Algebra, names: &[&str]) -> Path {
        alg.quiver().path_from_names(names).unwrap()
    }

    #[test]
    fn u_k_examples() {
        let a3 = fixtures::linear(Field::Rational, 3);
        let p = path(&a3, &["a2", "a1"]);
        let pt = UniserialPoint::new(&a3, &p, vec![]).unwrap();
        assert_eq!(u_k_submodule(&a3, &pt).unwrap().dim(), 0);

        let d = fixtures::example_d(Field::Rational);
        let p = path(&d, &["a2", "a1"]);
        let c = Field::Rational.from_i64(3);
        let pt = UniserialPoint::new(&d, &p, vec![vec![c]]).unwrap();
        let uk = u_k_submodule(&d, &pt).unwrap();
        // (1 - 3) a2*a1 lies in U_k, hence a2*a1 does.
        assert!(uk.contains(&d.path_elem(&p)));

        let a = fixtures::example_a(Field::Rational);
        let p = path(&a, &["a1"]);
        let pt = UniserialPoint::new(&a, &p, vec![]).unwrap();
        let uk = u_k_submodule(&a, &pt).unwrap();
        assert!(uk.contains(&a.path_elem(&path(&a, &["b1", "a1"]))));
    }

    #[test]
    fn phi_examples() {
        let a2 = fixtures::linear(Field::Rational, 2);
        let p = path(&a2, &["a1"]);
        let u = phi_p(&a2, &UniserialPoint::new(&a2, &p, vec![]).unwrap()).unwrap();
        assert_eq!(u.rep.dims(), &[1, 1]);

        let d = fixtures::example_d(Field::Rational);
        let p = path(&d, &["a2", "a1"]);
        let one = UniserialPoint::constant(&d, &p, &Field::Rational.one());
        let u = phi_p(&d, &one).unwrap();
        assert_eq!(u.rep.total_dim(), 3);
        let zero = UniserialPoint::constant(&d, &p, &Field::Rational.zero());
        assert!(matches!(phi_p(&d, &zero), Err(Error::NotInVariety(_))));

        let a = fixtures::example_a(Field::Rational);
        let u = phi_p(&a, &UniserialPoint::new(&a, &path(&a, &["a1"]), vec![]).unwrap()).unwrap();
        assert_eq!(u.rep.dims(), &[1, 1, 0, 0, 0]);
    }

    #[test]
    fn enumeration_and_masts() {
        for p in [2, 3] {
            let f = Field::prime(p).unwrap();
            let d = fixtures::example_d(f);
            let mast = path(&d, &["a2", "a1"]);
            let pts = enumerate_variety(&d, &mast, VARIETY_COORD_CAP).unwrap();
            assert_eq!(pts.len(), 1);
            assert_eq!(pts[0].scalars, vec![vec![f.one()]]);
        }
        let a3 = fixtures::linear(Field::prime(2).unwrap(), 3);
        let full = path(&a3, &["a2", "a1"]);
        assert_eq!(enumerate_variety(&a3, &full, 4).unwrap().len(), 1);
        let ms = masts(&a3, 3);
        assert_eq!(ms.len(), 6);
        assert!(ms.iter().all(|(_, s)| *s == MastStatus::Verified));
        let q = fixtures::example_d(Field::Rational);
        assert_eq!(enumerate_variety(&q, &path(&q, &["a1"]), 4), Err(Error::InfiniteField));
    }

    #[test]
    fn fdelta_parametrization() {
        let d = fixtures::example_d(Field::Rational);
        let p = path(&d, &["a2", "a1"]);
        let d1 = d.quiver().arrow_id("d1").unwrap();
        let u = from_mast_and_fdelta(&d, &p, &[(d1, Field::Rational.one())]).unwrap();
        assert_eq!(fdelta_of(&d, &u).unwrap(), vec![(d1, Field::Rational.one())]);
        let v = phi_p(&d, &u.point).unwrap();
        assert!(is_isomorphic_indec(&u.rep, &v.rep));
        assert!(matches!(
            from_mast_and_fdelta(&d, &p, &[(d1, Field::Rational.zero())]),
            Err(Error::RelationViolated(_))
        ));
    }

    #[test]
    fn round_trip_scalars() {
        let f = Field::prime(3).unwrap();
        let d = fixtures::example_d(f);
        for mast in [path(&d, &["a2", "a1"]), path(&d, &["b1", "d1"]), path(&d, &["b1", "a2", "a1"])] {
            for pt in enumerate_variety(&d, &mast, 8).unwrap() {
                let u = phi_p(&d, &pt).unwrap();
                assert_eq!(read_scalars(&d, &u.rep, &mast, &u.top).unwrap(), pt.scalars);
                let w = UniserialModule::from_rep(&d, u.rep.clone(), &mast).unwrap();
                assert!(is_isomorphic_indec(&phi_p(&d, &w.point).unwrap().rep, &u.rep));
            }
        }
    }
}

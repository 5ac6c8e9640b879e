//! Projective presentations, the transpose and `DTr`, `Ext¹` and almost split
//! sequences, with a brute-force census of indecomposables as oracle.

mod bounds;
mod census;

use serde::Serialize;

pub use bounds::{check_bounds, middle_term_dichotomy, BoundCheck, BoundsReport, Dichotomy};
pub use census::{census_indecomposables, Census, DEFAULT_CENSUS_BUDGET};

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Matrix, Subspace};
use crate::module_rep::{
    combine, decompose, direct_sum, hom_space, is_indecomposable, is_isomorphic_indec, is_split_epi, kernel, pushout,
    DirectSum, ModuleMap, Projective, Rep, Summand,
};
use crate::uniserial::cyclic_map;

/// `⊕_j Λe_{w_j}` with access to each summand's generator.
#[derive(Clone, Debug)]
pub struct ProjSum {
    pub vertices: Vec<usize>,
    pub parts: Vec<Projective>,
    pub sum: DirectSum,
}

impl ProjSum {
    pub fn new(alg: &Algebra, vertices: Vec<usize>) -> ProjSum {
        let parts: Vec<Projective> = vertices.iter().map(|&v| Projective::new(alg, v)).collect();
        let sum = if parts.is_empty() {
            DirectSum {
                rep: Rep::zero(alg.quiver_arc(), alg.field()),
                inclusions: Vec::new(),
                projections: Vec::new(),
            }
        } else {
            let reps: Vec<&Rep> = parts.iter().map(|p| &p.rep).collect();
            direct_sum(&reps)
        };
        ProjSum { vertices, parts, sum }
    }

    pub fn rep(&self) -> &Rep {
        &self.sum.rep
    }

    /// Global vector of the `j`-th generator `e_{w_j}`.
    pub fn generator(&self, alg: &Algebra, j: usize) -> Vec<Scalar> {
        let p = &self.parts[j];
        let e = p.vector(alg, &alg.vertex_elem(p.vertex)).expect("idempotent lies in its projective");
        self.sum.inclusions[j].apply(&p.rep, self.rep(), &e)
    }

    /// Component of a global vector in summand `i`, as an algebra element.
    pub fn component_elem(&self, alg: &Algebra, x: &[Scalar], i: usize) -> Elem {
        let y = self.sum.projections[i].apply(self.rep(), &self.parts[i].rep, x);
        self.parts[i].element(alg, &y)
    }

    /// Global vector of a tuple of elements, one per summand.
    pub fn vector_of(&self, alg: &Algebra, elems: &[Elem]) -> Vec<Scalar> {
        let mut out = vec![alg.field().zero(); self.rep().total_dim()];
        for (i, x) in elems.iter().enumerate() {
            let v = self.parts[i].vector(alg, x).expect("element outside its projective summand");
            let g = self.sum.inclusions[i].apply(&self.parts[i].rep, self.rep(), &v);
            crate::linalg::axpy(&mut out, &alg.field().one(), &g);
        }
        out
    }

    /// The map to `M` sending generator `j` to `images[j]`.
    pub fn map_to(&self, alg: &Algebra, m: &Rep, images: &[Vec<Scalar>]) -> ModuleMap {
        let mut out = ModuleMap::zero(self.rep(), m);
        for (j, x) in images.iter().enumerate() {
            let c = cyclic_map(alg, &self.parts[j], m, x);
            out = out.add(&c.compose(&self.sum.projections[j]));
        }
        out
    }
}

/// `P₁ --d--> P₀ --cover--> M -> 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p0: ProjSum,
    pub cover: ModuleMap,
    pub p1: ProjSum,
    pub d: ModuleMap,
    /// `d_elems[j][i] ∈ e_{w_j} Λ e_{v_i}`: component `i` of `d(e_{w_j})`.
    pub d_elems: Vec<Vec<Elem>>,
    /// `Ω M = ker(cover)` with its inclusion into `P₀`.
    pub omega: Rep,
    pub omega_inclusion: ModuleMap,
    pub minimal: bool,
}

/// Projective cover `P₀ -> M`, with the chosen top generators.
pub fn projective_cover(alg: &Algebra, m: &Rep) -> (ProjSum, ModuleMap) {
    let rad = m.radical();
    let f = m.field();
    let mut vertices = Vec::new();
    let mut images = Vec::new();
    for v in 0..m.dims().len() {
        for i in rad.parts[v].complement_indices() {
            let mut c = vec![f.zero(); m.dim_at(v)];
            c[i] = f.one();
            vertices.push(v);
            images.push(m.embed(v, &c));
        }
    }
    let p0 = ProjSum::new(alg, vertices);
    let cover = p0.map_to(alg, m, &images);
    (p0, cover)
}

pub fn minimal_presentation(alg: &Algebra, m: &Rep) -> Presentation {
    let (p0, cover) = projective_cover(alg, m);
    let (omega, inc) = kernel(&cover, p0.rep());
    let (p1, c1) = projective_cover(alg, &omega);
    let d = inc.compose(&c1);
    let d_elems: Vec<Vec<Elem>> = (0..p1.vertices.len())
        .map(|j| {
            let x = d.apply(p1.rep(), p0.rep(), &p1.generator(alg, j));
            (0..p0.vertices.len()).map(|i| p0.component_elem(alg, &x, i)).collect()
        })
        .collect();
    let rad0 = p0.rep().radical();
    let minimal = cover.is_surjective() && d.image_sub(p0.rep()).is_subset_of(&rad0) && cover.kernel_sub(p0.rep()).is_subset_of(&rad0);
    Presentation { p0, cover, p1, d, d_elems, omega, omega_inclusion: inc, minimal }
}

pub fn is_projective(alg: &Algebra, m: &Rep) -> bool {
    minimal_presentation(alg, m).omega.is_zero()
}

/// `Tr M = coker(Hom(P₀,Λ) -> Hom(P₁,Λ))` as a module over `op = Λ^op`.
pub fn transpose(alg: &Algebra, op: &Algebra, m: &Rep) -> Rep {
    transpose_of(alg, op, &minimal_presentation(alg, m))
}

fn transpose_of(alg: &Algebra, op: &Algebra, pres: &Presentation) -> Rep {
    let q0 = ProjSum::new(op, pres.p0.vertices.clone());
    let q1 = ProjSum::new(op, pres.p1.vertices.clone());
    let images: Vec<Vec<Scalar>> = (0..pres.p0.vertices.len())
        .map(|i| {
            let tuple: Vec<Elem> = (0..pres.p1.vertices.len())
                .map(|j| alg.to_opposite(op, &pres.d_elems[j][i]))
                .collect();
            q1.vector_of(op, &tuple)
        })
        .collect();
    let dstar = q0.map_to(op, q1.rep(), &images);
    q1.rep().quotient(&dstar.image_sub(q1.rep())).0
}

/// `D M`, a module over the opposite algebra.
pub fn dual(op: &Algebra, m: &Rep) -> Rep {
    m.dual(op.quiver_arc())
}

/// The Auslander-Reiten translate `DTr M`.
pub fn dtr(alg: &Algebra, op: &Algebra, m: &Rep) -> Rep {
    transpose(alg, op, m).dual(alg.quiver_arc())
}

/// The inverse translate `TrD N`.
pub fn trd(alg: &Algebra, op: &Algebra, n: &Rep) -> Rep {
    transpose(op, alg, &n.dual(op.quiver_arc())).with_quiver(alg.quiver_arc())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SesOrigin {
    ExtBasis,
    AlmostSplit,
    User,
}

/// `0 -> A --f--> E --g--> C -> 0`.
#[derive(Clone, Debug)]
pub struct Ses {
    pub a: Rep,
    pub e: Rep,
    pub c: Rep,
    pub f: ModuleMap,
    pub g: ModuleMap,
    pub origin: SesOrigin,
}

impl Ses {
    pub fn is_exact(&self) -> bool {
        self.f.is_injective()
            && self.g.is_surjective()
            && self.g.compose(&self.f).is_zero()
            && self.e.total_dim() == self.a.total_dim() + self.c.total_dim()
            && self.f.is_homomorphism(&self.a, &self.e)
            && self.g.is_homomorphism(&self.e, &self.c)
    }

    pub fn is_split(&self) -> bool {
        is_split_epi(&self.g, &self.e, &self.c).is_some()
    }
}

/// Solve `X ∘ q = target` for surjective `q`, vertex by vertex.
fn factor_through_surjection(q: &ModuleMap, target: &ModuleMap) -> Option<ModuleMap> {
    let blocks = q
        .blocks
        .iter()
        .zip(&target.blocks)
        .map(|(qb, tb)| qb.transpose().solve_matrix(&tb.transpose()).map(|x| x.transpose()))
        .collect::<Option<Vec<Matrix>>>()?;
    Some(ModuleMap { blocks })
}

/// Solve `inc ∘ X = target` for injective `inc`, vertex by vertex.
fn factor_through_injection(inc: &ModuleMap, target: &ModuleMap) -> Option<ModuleMap> {
    let blocks = inc
        .blocks
        .iter()
        .zip(&target.blocks)
        .map(|(ib, tb)| ib.solve_matrix(tb))
        .collect::<Option<Vec<Matrix>>>()?;
    Some(ModuleMap { blocks })
}

/// `Ext¹(C, A) = Hom(ΩC, A) / {h ∘ ι : h ∈ Hom(P₀, A)}`.
#[derive(Clone, Debug)]
pub struct Ext1 {
    pub c: Rep,
    pub a: Rep,
    pub pres: Presentation,
    /// Representatives `ΩC -> A` of a basis.
    pub basis: Vec<ModuleMap>,
    restrictions: Vec<ModuleMap>,
}

pub fn ext1(alg: &Algebra, c: &Rep, a: &Rep) -> Ext1 {
    let pres = minimal_presentation(alg, c);
    let f = alg.field();
    let homs = hom_space(&pres.omega, a);
    let restrictions: Vec<ModuleMap> = hom_space(pres.p0.rep(), a)
        .iter()
        .map(|h| h.compose(&pres.omega_inclusion))
        .collect();
    let width = ModuleMap::zero(&pres.omega, a).flatten().len();
    let mut span = Subspace::zero(f, width);
    let mut kept = Vec::new();
    for r in &restrictions {
        if span.insert(&r.flatten()) {
            kept.push(r.clone());
        }
    }
    let mut basis = Vec::new();
    for h in homs {
        if span.insert(&h.flatten()) {
            basis.push(h);
        }
    }
    Ext1 { c: c.clone(), a: a.clone(), pres, basis, restrictions: kept }
}

impl Ext1 {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of the class of `h: ΩC -> A` in the chosen basis.
    pub fn coords(&self, h: &ModuleMap) -> Vec<Scalar> {
        let f = self.a.field();
        if self.basis.is_empty() {
            return Vec::new();
        }
        let cols: Vec<Vec<Scalar>> = self.restrictions.iter().chain(&self.basis).map(ModuleMap::flatten).collect();
        let m = Matrix::from_columns(f, cols[0].len(), &cols);
        let x = m.solve(&h.flatten()).expect("map lies in Hom(ΩC, A)");
        x[self.restrictions.len()..].to_vec()
    }

    pub fn class(&self, coeffs: &[Scalar]) -> ModuleMap {
        combine(&self.basis, coeffs, ModuleMap::zero(&self.pres.omega, &self.a))
    }

    /// The extension obtained by pushing out `0 -> ΩC -> P₀ -> C -> 0` along `h`.
    pub fn sequence(&self, h: &ModuleMap, origin: SesOrigin) -> Ses {
        let pres = &self.pres;
        let (e, ia, ip) = pushout(h, &pres.omega_inclusion, &pres.omega, &self.a, pres.p0.rep());
        let q = ModuleMap {
            blocks: ia.blocks.iter().zip(&ip.blocks).map(|(x, y)| x.hstack(y)).collect(),
        };
        let zero_a = ModuleMap::zero(&self.a, &self.c);
        let target = ModuleMap {
            blocks: zero_a.blocks.iter().zip(&pres.cover.blocks).map(|(x, y)| x.hstack(y)).collect(),
        };
        let g = factor_through_surjection(&q, &target).expect("pushout maps onto C");
        Ses { a: self.a.clone(), e, c: self.c.clone(), f: ia, g, origin }
    }

    /// Lift `t ∈ End(C)` to `ΩC -> ΩC` through the presentation.
    pub fn lift_to_omega(&self, alg: &Algebra, t: &ModuleMap) -> ModuleMap {
        let pres = &self.pres;
        let p0 = &pres.p0;
        let images: Vec<Vec<Scalar>> = (0..p0.vertices.len())
            .map(|j| {
                let y = t.apply(&self.c, &self.c, &pres.cover.apply(p0.rep(), &self.c, &p0.generator(alg, j)));
                let v = p0.vertices[j];
                let pre = pres.cover.blocks[v]
                    .solve(&self.c.component(&y, v))
                    .expect("projective cover is surjective");
                p0.rep().embed(v, &pre)
            })
            .collect();
        let t0 = p0.map_to(alg, p0.rep(), &images);
        factor_through_injection(&pres.omega_inclusion, &t0.compose(&pres.omega_inclusion))
            .expect("lift preserves the syzygy")
    }
}

/// Basis of `rad End(M)` for `M` with `End(M)/rad ≅ K`.
pub fn radical_of_local_endomorphisms(m: &Rep) -> Result<Vec<ModuleMap>> {
    let basis = hom_space(m, m);
    let field = m.field();
    let id = ModuleMap::identity(m);
    let mut lambdas = Vec::new();
    for b in &basis {
        let block = b.blocks.iter().find(|x| x.rows() > 0).expect("nonzero module");
        let roots = crate::poly::roots(&block.char_poly(), field);
        let lambda = roots
            .into_iter()
            .find(|l| b.sub(&id.scale(l)).is_nilpotent())
            .ok_or_else(|| Error::Unsupported("End(M)/rad is larger than the base field".into()))?;
        lambdas.push(lambda);
    }
    let k = lambdas.iter().position(|l| !l.is_zero()).ok_or_else(|| Error::Verification("End(M) has no unit".into()))?;
    let mut out = Vec::new();
    for (i, b) in basis.iter().enumerate() {
        if i == k {
            continue;
        }
        let c = &lambdas[i] * &lambdas[k].inv();
        out.push(b.sub(&basis[k].scale(&c)));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certification {
    /// Checked against every census module; `exhaustive` is false when the
    /// census was truncated by its caps.
    Census { modules: usize, exhaustive: bool },
    /// Only the bimodule socle condition was established.
    SocleCriterion,
}

#[derive(Clone, Debug)]
pub struct AlmostSplit {
    pub ses: Ses,
    pub summands: Vec<Summand>,
    pub certification: Certification,
}

impl AlmostSplit {
    pub fn alpha(&self) -> usize {
        self.summands.len()
    }

    pub fn middle(&self) -> &Rep {
        &self.ses.e
    }

    /// Whether `X` is isomorphic to an indecomposable summand of the middle term.
    pub fn has_summand(&self, x: &Rep) -> bool {
        self.summands.iter().any(|s| is_isomorphic_indec(&s.rep, x))
    }

    /// Every non-retraction from a census module or from `U` itself factors
    /// through `g`.
    pub fn certify(&mut self, census: &Census) -> Result<()> {
        let (e, u, g) = (&self.ses.e, &self.ses.c, &self.ses.g);
        if !self.ses.is_exact() || self.ses.is_split() {
            return Err(Error::Verification("sequence is not a nonsplit exact sequence".into()));
        }
        let lifts = |x: &Rep, maps: &[ModuleMap]| -> bool {
            let through: Vec<ModuleMap> = hom_space(x, e).iter().map(|h| g.compose(h)).collect();
            if maps.is_empty() {
                return true;
            }
            let width = maps[0].flatten().len();
            let span = Subspace::spanned_by(u.field(), width, &through.iter().map(ModuleMap::flatten).collect::<Vec<_>>());
            maps.iter().all(|m| span.contains(&m.flatten()))
        };
        let rad = radical_of_local_endomorphisms(u)?;
        if !lifts(u, &rad) {
            return Err(Error::Verification("a radical endomorphism of U does not lift through g".into()));
        }
        for x in &census.modules {
            if x.dims() == u.dims() && is_isomorphic_indec(x, u) {
                continue;
            }
            let maps = hom_space(x, u);
            if !maps.is_empty() && !lifts(x, &maps) {
                return Err(Error::Verification(format!(
                    "a map from the census module with dimension vector {:?} does not lift through g",
                    x.dims()
                )));
            }
        }
        self.certification = Certification::Census { modules: census.modules.len(), exhaustive: census.exhaustive };
        Ok(())
    }
}

/// The almost split sequence ending in an indecomposable nonprojective `U`:
/// a nonzero element of `Ext¹(U, DTrU)` killed by `rad End(U)` and
/// `rad End(DTrU)`.
pub fn almost_split_sequence(alg: &Algebra, op: &Algebra, u: &Rep) -> Result<AlmostSplit> {
    if u.is_zero() || !is_indecomposable(u) {
        return Err(Error::Decomposable);
    }
    let pres = minimal_presentation(alg, u);
    if pres.omega.is_zero() {
        return Err(Error::Projective);
    }
    let a = transpose_of(alg, op, &pres).dual(alg.quiver_arc());
    let ext = ext1(alg, u, &a);
    let n = ext.dim();
    if n == 0 {
        return Err(Error::Verification("Ext¹(U, DTrU) vanishes".into()));
    }
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for r in radical_of_local_endomorphisms(u)? {
        let r_omega = ext.lift_to_omega(alg, &r);
        let cols: Vec<Vec<Scalar>> = ext.basis.iter().map(|b| ext.coords(&b.compose(&r_omega))).collect();
        push_rows(&mut rows, &cols, n);
    }
    for s in radical_of_local_endomorphisms(&a)? {
        let cols: Vec<Vec<Scalar>> = ext.basis.iter().map(|b| ext.coords(&s.compose(b))).collect();
        push_rows(&mut rows, &cols, n);
    }
    let f = alg.field();
    let socle = if rows.is_empty() {
        (0..n).map(|i| (0..n).map(|j| if i == j { f.one() } else { f.zero() }).collect()).collect()
    } else {
        Matrix::from_row_vecs(f, n, &rows).kernel()
    };
    let xi = socle.first().ok_or_else(|| Error::Verification("Ext¹ socle is zero".into()))?;
    let ses = ext.sequence(&ext.class(xi), SesOrigin::AlmostSplit);
    if !ses.is_exact() || ses.is_split() {
        return Err(Error::Verification("almost split candidate is not a nonsplit exact sequence".into()));
    }
    let summands = decompose(&ses.e);
    Ok(AlmostSplit { ses, summands, certification: Certification::SocleCriterion })
}

/// Append the rows of the `n`-column matrix whose columns are `cols`.
fn push_rows(rows: &mut Vec<Vec<Scalar>>, cols: &[Vec<Scalar>], n: usize) {
    let height = cols.first().map_or(0, Vec::len);
    for r in 0..height {
        rows.push((0..n).map(|c| cols[c][r].clone()).collect());
    }
}

/// `α(U)`: number of indecomposable summands of the almost split middle term.
pub fn alpha(alg: &Algebra, op: &Algebra, u: &Rep) -> Result<usize> {
    Ok(almost_split_sequence(alg, op, u)?.alpha())
}

/// Ground truth for the radical embedding `JU -> U` of a uniserial `U`:
/// irreducible iff `JU ≠ 0` and either `U` is projective (then `JU -> U` is
/// minimal right almost split) or `JU` is a summand of the almost split
/// middle term ending in `U`.
pub fn radical_embedding_irreducible(alg: &Algebra, op: &Algebra, u: &Rep, census: Option<&Census>) -> Result<bool> {
    let (ju, _) = u.sub_rep(&u.radical());
    if ju.is_zero() {
        return Ok(false);
    }
    if is_projective(alg, u) {
        return Ok(true);
    }
    let mut ar = almost_split_sequence(alg, op, u)?;
    if let Some(c) = census {
        ar.certify(c)?;
    }
    Ok(ar.has_summand(&ju))
}

//! Quivers, paths and the combinatorics of a path inside a quiver: right
//! subpaths, detours, routes, and the classification of arrows touching a mast.
//!
//! Paths compose right to left. `Path::arrows` lists arrows in that order, so
//! the first traversed arrow is the last entry and `compose(q, p)` walks `p`
//! and then `q`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

impl Quiver {
    pub fn new<V, A, S, T>(vertices: &[V], arrows: &[(A, S, T)]) -> Result<Quiver>
    where
        V: AsRef<str>,
        A: AsRef<str>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut q = Quiver {
            vertices: Vec::new(),
            arrows: Vec::new(),
            vertex_index: HashMap::new(),
            arrow_index: HashMap::new(),
        };
        for v in vertices {
            q.add_vertex(v.as_ref())?;
        }
        for (a, s, t) in arrows {
            q.add_arrow(a.as_ref(), s.as_ref(), t.as_ref())?;
        }
        Ok(q)
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<usize> {
        if self.vertex_index.contains_key(name) {
            return Err(Error::Duplicate { kind: "vertex", name: name.into() });
        }
        let id = self.vertices.len();
        self.vertices.push(name.to_string());
        self.vertex_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<usize> {
        if self.arrow_index.contains_key(name) || self.vertex_index.contains_key(name) {
            return Err(Error::Duplicate { kind: "arrow", name: name.into() });
        }
        let s = self.vertex(source)?;
        let t = self.vertex(target)?;
        let id = self.arrows.len();
        self.arrows.push(Arrow { name: name.into(), source: s, target: t });
        self.arrow_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.into()))
    }

    pub fn arrow_id(&self, name: &str) -> Result<usize> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(name.into()))
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_to(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// The quiver with every arrow reversed; names are kept.
    pub fn opposite(&self) -> Quiver {
        let mut q = self.clone();
        for a in q.arrows.iter_mut() {
            std::mem::swap(&mut a.source, &mut a.target);
        }
        q
    }

    pub fn has_oriented_cycle(&self) -> bool {
        // Kahn's algorithm: a cycle remains iff some vertex never reaches in-degree 0.
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in &self.arrows {
                if a.source == v {
                    indeg[a.target] -= 1;
                    if indeg[a.target] == 0 {
                        stack.push(a.target);
                    }
                }
            }
        }
        seen < n
    }

    pub fn stationary(&self, v: usize) -> Path {
        Path::stationary(v)
    }

    pub fn arrow_path(&self, a: usize) -> Path {
        let ar = &self.arrows[a];
        Path { source: ar.source, target: ar.target, arrows: vec![a] }
    }

    /// Build a path from arrows listed right to left.
    pub fn path(&self, arrows_rtl: &[usize]) -> Result<Path> {
        let Some(&first) = arrows_rtl.last() else {
            return Err(Error::Composition("empty arrow list".into()));
        };
        let mut p = self.arrow_path(first);
        for &a in arrows_rtl.iter().rev().skip(1) {
            p = compose(self, &self.arrow_path(a), &p)?;
        }
        Ok(p)
    }

    /// Parse `b*a` (right to left) or `e(v)` against this quiver's names.
    pub fn path_from_names(&self, names: &[&str]) -> Result<Path> {
        let ids: Result<Vec<usize>> = names.iter().map(|n| self.arrow_id(n)).collect();
        self.path(&ids?)
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e({})", self.vertices[p.source])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// All paths starting at `v` of length at most `maxlen`, shortest first.
    pub fn paths_from(&self, v: usize, maxlen: usize) -> Vec<Path> {
        let mut out = vec![Path::stationary(v)];
        let mut frontier = vec![Path::stationary(v)];
        for _ in 0..maxlen {
            let mut next = Vec::new();
            for p in &frontier {
                for a in self.arrows_from(p.target) {
                    next.push(p.extend(self, a));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn stationary(v: usize) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_stationary(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Arrows right to left: index 0 is traversed last.
    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    /// `a · self`, the path followed by arrow `a`.
    pub fn extend(&self, q: &Quiver, a: usize) -> Path {
        debug_assert_eq!(q.arrow(a).source, self.target);
        let mut arrows = Vec::with_capacity(self.arrows.len() + 1);
        arrows.push(a);
        arrows.extend_from_slice(&self.arrows);
        Path { source: self.source, target: q.arrow(a).target, arrows }
    }

    /// Vertices visited, in traversal order (length + 1 entries).
    pub fn vertices(&self, q: &Quiver) -> Vec<usize> {
        let mut out = vec![self.source];
        for &a in self.arrows.iter().rev() {
            out.push(q.arrow(a).target);
        }
        out
    }

    /// The right subpath of length `k` (the first `k` arrows traversed).
    pub fn right_subpath(&self, q: &Quiver, k: usize) -> Path {
        assert!(k <= self.len());
        let arrows = self.arrows[self.len() - k..].to_vec();
        let target = match arrows.first() {
            Some(&a) => q.arrow(a).target,
            None => self.source,
        };
        Path { source: self.source, target, arrows }
    }

    /// The left factor `r` with `self = r · right_subpath(k)`.
    pub fn left_factor(&self, q: &Quiver, k: usize) -> Path {
        assert!(k <= self.len());
        let arrows = self.arrows[..self.len() - k].to_vec();
        let source = self.right_subpath(q, k).target;
        let target = if arrows.is_empty() { source } else { self.target };
        Path { source, target, arrows }
    }

    pub fn right_subpaths(&self, q: &Quiver) -> Vec<Path> {
        (0..=self.len()).map(|k| self.right_subpath(q, k)).collect()
    }

    pub fn is_right_subpath_of(&self, p: &Path) -> bool {
        self.source == p.source && p.arrows.ends_with(&self.arrows)
    }

    pub fn has_repeated_vertex(&self, q: &Quiver) -> bool {
        let vs = self.vertices(q);
        let mut seen = std::collections::HashSet::new();
        !vs.iter().all(|v| seen.insert(*v))
    }
}

/// A path from raw parts; the caller guarantees the arrows compose.
pub(crate) fn raw_path(source: usize, target: usize, arrows: Vec<usize>) -> Path {
    Path { source, target, arrows }
}

/// `q · p`: traverse `p`, then `q`.
pub fn compose(quiver: &Quiver, q: &Path, p: &Path) -> Result<Path> {
    if p.target != q.source {
        return Err(Error::Composition(format!(
            "{} ends at {} but {} starts at {}",
            quiver.path_name(p),
            quiver.vertex_name(p.target),
            quiver.path_name(q),
            quiver.vertex_name(q.source)
        )));
    }
    let mut arrows = q.arrows.clone();
    arrows.extend_from_slice(&p.arrows);
    Ok(Path { source: p.source, target: q.target, arrows })
}

pub fn right_subpaths(quiver: &Quiver, p: &Path) -> Vec<Path> {
    p.right_subpaths(quiver)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Detour {
    pub arrow: usize,
    pub subpath: Path,
    /// `v_i(α, u)`, indexed by `0..v_family.len()`.
    pub v_family: Vec<Path>,
}

impl Detour {
    /// The path `αu`.
    pub fn path(&self, q: &Quiver) -> Path {
        self.subpath.extend(q, self.arrow)
    }

    pub fn label(&self, q: &Quiver) -> String {
        format!("({}, {})", q.arrow(self.arrow).name, q.path_name(&self.subpath))
    }
}

pub fn detours(quiver: &Quiver, p: &Path) -> Vec<Detour> {
    let subs = p.right_subpaths(quiver);
    let mut out = Vec::new();
    for u in &subs {
        for a in quiver.arrows_from(u.target) {
            let au = u.extend(quiver, a);
            if au.is_right_subpath_of(p) {
                continue;
            }
            let t = quiver.arrow(a).target;
            let v_family: Vec<Path> = subs
                .iter()
                .filter(|v| v.len() > u.len() && v.target == t)
                .cloned()
                .collect();
            if !v_family.is_empty() {
                out.push(Detour { arrow: a, subpath: u.clone(), v_family });
            }
        }
    }
    out
}

/// Whether `q` (starting at `s(p)`) visits an in-order subsequence of `p`'s
/// vertex sequence and nothing else.
pub fn is_route(quiver: &Quiver, q: &Path, p: &Path) -> bool {
    if q.source != p.source {
        return false;
    }
    let mast = p.vertices(quiver);
    let mut pos = 0;
    for v in q.vertices(quiver) {
        match mast[pos..].iter().position(|&w| w == v) {
            Some(i) => pos += i + 1,
            None => return false,
        }
    }
    true
}

pub fn non_routes_up_to(quiver: &Quiver, p: &Path, maxlen: usize) -> Vec<Path> {
    quiver
        .paths_from(p.source, maxlen)
        .into_iter()
        .filter(|q| !is_route(quiver, q, p))
        .collect()
}

/// Non-routes all of whose proper right subpaths are routes (`βu` with `u` a
/// route). They generate the same left ideal as all non-routes and there are
/// finitely many: a route on `p` has length at most `len(p)`.
pub fn minimal_non_routes(quiver: &Quiver, p: &Path) -> Vec<Path> {
    let mut out = Vec::new();
    for u in quiver.paths_from(p.source, p.len()) {
        if !is_route(quiver, &u, p) {
            continue;
        }
        for a in quiver.arrows_from(u.target) {
            let q = u.extend(quiver, a);
            if !is_route(quiver, &q, p) {
                out.push(q);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrowClassification {
    /// Vertices of the mast in order; position `i` (0-based) is vertex `i + 1`.
    pub mast_vertices: Vec<usize>,
    /// `α_1, ..., α_{n-1}` in traversal order.
    pub mast_arrows: Vec<usize>,
    pub b: Vec<usize>,
    pub b_prime: Vec<usize>,
    pub c: Vec<usize>,
    pub c_prime: Vec<usize>,
    pub d: Vec<usize>,
}

impl ArrowClassification {
    pub fn n(&self) -> usize {
        self.mast_vertices.len()
    }

    /// 1-based position of a vertex along the mast.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.mast_vertices.iter().position(|&w| w == v).map(|i| i + 1)
    }

    pub fn vertex_at(&self, i: usize) -> usize {
        self.mast_vertices[i - 1]
    }
}

pub fn classify_arrows(quiver: &Quiver, p: &Path) -> Result<ArrowClassification> {
    if p.has_repeated_vertex(quiver) {
        return Err(Error::Unsupported(format!(
            "mast {} repeats a vertex",
            quiver.path_name(p)
        )));
    }
    let mast_vertices = p.vertices(quiver);
    let mast_arrows: Vec<usize> = p.arrows.iter().rev().copied().collect();
    let n = mast_vertices.len();
    let pos = |v: usize| mast_vertices.iter().position(|&w| w == v).map(|i| i + 1);
    let mut c = ArrowClassification {
        mast_vertices: mast_vertices.clone(),
        mast_arrows: mast_arrows.clone(),
        b: vec![],
        b_prime: vec![],
        c: vec![],
        c_prime: vec![],
        d: vec![],
    };
    for (id, a) in quiver.arrows().iter().enumerate() {
        let (s, t) = (pos(a.source), pos(a.target));
        if matches!(s, Some(i) if i < n) && t.is_none() {
            c.b.push(id);
        }
        if s == Some(n) {
            c.b_prime.push(id);
        }
        if s.is_none() && matches!(t, Some(j) if j >= 2) {
            c.c.push(id);
        }
        if t == Some(1) {
            c.c_prime.push(id);
        }
        if s.is_some() && t.is_some() && !mast_arrows.contains(&id) {
            c.d.push(id);
        }
    }
    Ok(c)
}

pub fn has_oriented_cycle(quiver: &Quiver) -> bool {
    quiver.has_oriented_cycle()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The illustration quiver with mast a3*a2*a1.
    fn illustration() -> Quiver {
        Quiver::new(
            &["1", "2", "3", "4", "x", "y", "z", "w", "v"],
            &[
                ("a1", "1", "2"),
                ("a2", "2", "3"),
                ("a3", "3", "4"),
                ("d1", "1", "3"),
                ("d2", "3", "4"),
                ("g", "y", "2"),
                ("gp", "x", "1"),
                ("b", "2", "z"),
                ("eps", "z", "w"),
                ("bp1", "4", "v"),
                ("bp2", "4", "w"),
            ],
        )
        .unwrap()
    }

    fn linear(n: usize) -> Quiver {
        let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows: Vec<(String, String, String)> = (1..n)
            .map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string()))
            .collect();
        Quiver::new(&vs, &arrows).unwrap()
    }

    fn example_d() -> Quiver {
        Quiver::new(
            &["1", "2", "3", "4"],
            &[("a1", "1", "2"), ("a2", "2", "3"), ("d1", "2", "3"), ("b1", "3", "4")],
        )
        .unwrap()
    }

    #[test]
    fn compose_right_to_left() {
        let q = illustration();
        let a1 = q.arrow_path(q.arrow_id("a1").unwrap());
        let a2 = q.arrow_path(q.arrow_id("a2").unwrap());
        let p = compose(&q, &a2, &a1).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(q.vertex_name(p.source()), "1");
        assert_eq!(q.vertex_name(p.target()), "3");
        assert_eq!(q.path_name(&p), "a2*a1");
        assert!(compose(&q, &a1, &a2).is_err());
        let e = Path::stationary(p.target());
        assert_eq!(compose(&q, &e, &p).unwrap(), p);
    }

    #[test]
    fn right_subpath_counts() {
        let q = illustration();
        let p = q.path_from_names(&["a3", "a2", "a1"]).unwrap();
        let subs = right_subpaths(&q, &p);
        let names: Vec<String> = subs.iter().map(|s| q.path_name(s)).collect();
        assert_eq!(names, vec!["e(1)", "a1", "a2*a1", "a3*a2*a1"]);
        assert_eq!(right_subpaths(&q, &Path::stationary(0)).len(), 1);
    }

    #[test]
    fn detours_on_examples() {
        let q = illustration();
        let p = q.path_from_names(&["a3", "a2", "a1"]).unwrap();
        let ds = detours(&q, &p);
        let labels: Vec<String> = ds.iter().map(|d| d.label(&q)).collect();
        assert_eq!(labels, vec!["(d1, e(1))", "(d2, a2*a1)"]);
        for d in &ds {
            assert!(!d.path(&q).is_right_subpath_of(&p));
            for v in &d.v_family {
                assert!(v.len() > d.subpath.len());
                assert_eq!(v.target(), q.arrow(d.arrow).target);
            }
        }

        let qd = example_d();
        let pd = qd.path_from_names(&["a2", "a1"]).unwrap();
        let ds = detours(&qd, &pd);
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0].label(&qd), "(d1, a1)");
        assert_eq!(qd.path_name(&ds[0].v_family[0]), "a2*a1");

        let ql = linear(4);
        let pl = ql.path_from_names(&["a3", "a2", "a1"]).unwrap();
        assert!(detours(&ql, &pl).is_empty());
    }

    #[test]
    fn routes() {
        let q = illustration();
        let p = q.path_from_names(&["a3", "a2", "a1"]).unwrap();
        assert!(is_route(&q, &p, &p));
        let bp = q.path_from_names(&["b", "a1"]).unwrap();
        assert!(!is_route(&q, &bp, &p));
        let qd = example_d();
        let pd = qd.path_from_names(&["a2", "a1"]).unwrap();
        let da = qd.path_from_names(&["d1", "a1"]).unwrap();
        assert!(is_route(&qd, &da, &pd));
        let nr = minimal_non_routes(&qd, &pd);
        let names: Vec<String> = nr.iter().map(|r| qd.path_name(r)).collect();
        assert_eq!(names, vec!["b1*a2*a1", "b1*d1*a1"]);
    }

    #[test]
    fn classification() {
        let q = illustration();
        let p = q.path_from_names(&["a3", "a2", "a1"]).unwrap();
        let c = classify_arrows(&q, &p).unwrap();
        let names = |v: &[usize]| v.iter().map(|&a| q.arrow(a).name.clone()).collect::<Vec<_>>();
        assert_eq!(names(&c.b), vec!["b"]);
        assert_eq!(names(&c.b_prime), vec!["bp1", "bp2"]);
        assert_eq!(names(&c.c), vec!["g"]);
        assert_eq!(names(&c.c_prime), vec!["gp"]);
        assert_eq!(names(&c.d), vec!["d1", "d2"]);

        let ql = linear(3);
        let pl = ql.path_from_names(&["a2", "a1"]).unwrap();
        let cl = classify_arrows(&ql, &pl).unwrap();
        assert!(cl.b.is_empty() && cl.b_prime.is_empty() && cl.c.is_empty());
        assert!(cl.c_prime.is_empty() && cl.d.is_empty());
    }

    #[test]
    fn cycles() {
        let empty: [(&str, &str, &str); 0] = [];
        assert!(!Quiver::new(&["1"], &empty).unwrap().has_oriented_cycle());
        assert!(Quiver::new(&["1"], &[("l", "1", "1")]).unwrap().has_oriented_cycle());
        assert!(!illustration().has_oriented_cycle());
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        assert!(q.has_oriented_cycle());
        let p = q.path_from_names(&["b", "a"]).unwrap();
        assert!(classify_arrows(&q, &p).is_err());
    }
}

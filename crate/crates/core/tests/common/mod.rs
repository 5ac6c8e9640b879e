#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use userial::algebra::{build_algebra, Algebra, Relation, DEFAULT_DEGREE_CAP};
use userial::frontend::load;
use userial::quiver::{Path, Quiver};
use userial::Field;

pub fn f2() -> Field {
    Field::Prime(2)
}

pub fn example(name: &str) -> String {
    format!("{}/examples/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn load_example(name: &str, field: Option<&str>) -> Algebra {
    let mut text = std::fs::read_to_string(example(name)).unwrap();
    if let Some(f) = field {
        text = text.replacen("field Q", &format!("field {f}"), 1);
    }
    load(&text).unwrap().1
}

/// Arrow multisets `(s, t)` with `s < t` on `n` labelled vertices.
type Shape = Vec<(usize, usize)>;

fn canonical(n: usize, arrows: &Shape) -> Shape {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Shape> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut s: Shape = arrows.iter().map(|&(a, b)| (p[a], p[b])).collect();
        s.sort();
        if best.as_ref().map_or(true, |b| s < *b) {
            best = Some(s);
        }
    });
    best.unwrap()
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

fn connected(n: usize, arrows: &Shape) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in arrows {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Connected acyclic quivers with 2..=max_v vertices and 1..=max_a arrows,
/// one per isomorphism class.
pub fn acyclic_quivers(max_v: usize, max_a: usize) -> Vec<(usize, Shape)> {
    let mut out = Vec::new();
    for n in 2..=max_v {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).collect();
        let mut seen = BTreeSet::new();
        let mut cur = Vec::new();
        multisets(&pairs, 0, max_a, &mut cur, &mut |s| {
            if !s.is_empty() && s.len() + 1 >= n && connected(n, s) {
                let c = canonical(n, s);
                if seen.insert(c.clone()) {
                    out.push((n, c));
                }
            }
        });
    }
    out
}

fn multisets(pairs: &[(usize, usize)], start: usize, left: usize, cur: &mut Shape, f: &mut dyn FnMut(&Shape)) {
    f(cur);
    if left == 0 {
        return;
    }
    for i in start..pairs.len() {
        cur.push(pairs[i]);
        multisets(pairs, i, left - 1, cur, f);
        cur.pop();
    }
}

pub fn quiver(n: usize, shape: &Shape) -> Quiver {
    let vs: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
    let arrows: Vec<(String, String, String)> =
        shape.iter().enumerate().map(|(i, &(s, t))| (format!("x{i}"), (s + 1).to_string(), (t + 1).to_string())).collect();
    Quiver::new(&vs, &arrows).unwrap()
}

fn all_paths(q: &Quiver, len: usize) -> Vec<Path> {
    (0..q.num_vertices()).flat_map(|v| q.paths_from(v, len)).filter(|p| p.len() == len).collect()
}

fn contains_killed(p: &Path, killed: &[Path]) -> bool {
    let a = p.arrows();
    killed.iter().any(|k| a.windows(k.len()).any(|w| w == k.arrows()))
}

/// Monomial ideals: all paths of length 4, plus a seeded selection of
/// length-2 and length-3 paths killed with probability `density`.
fn monomial_relations(q: &Quiver, field: Field, rng: &mut ChaCha8Rng, density: f64) -> Vec<Relation> {
    let mut killed: Vec<Path> = Vec::new();
    for len in 2..=3 {
        for p in all_paths(q, len) {
            if !contains_killed(&p, &killed) && rng.gen_bool(density) {
                killed.push(p);
            }
        }
    }
    for p in all_paths(q, 4) {
        if !contains_killed(&p, &killed) {
            killed.push(p);
        }
    }
    killed.into_iter().map(|p| Relation::monomial(field, p)).collect()
}

/// Triangular monomial algebras over `F_2` with at most 4 vertices, 5 arrows
/// and nilpotency degree at most 4: every quiver shape up to isomorphism,
/// each with the truncation `J^4 = 0` and two seeded monomial ideals.
pub fn monomial_family(seed: u64) -> Vec<Algebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (n, shape) in acyclic_quivers(4, 5) {
        for density in [0.0, 0.35, 0.7] {
            let q = quiver(n, &shape);
            let rels = monomial_relations(&q, f2(), &mut rng, density);
            if let Ok(a) = build_algebra(q, f2(), rels, DEFAULT_DEGREE_CAP) {
                if a.nilpotency() <= 4 {
                    out.push(a);
                }
            }
        }
    }
    out
}

/// Non-monomial algebras over `F_2`: one commutativity relation `p + q` between
/// parallel paths of length at least 2, plus monomial cuts.
pub fn binomial_family(seed: u64) -> Vec<Algebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (n, shape) in acyclic_quivers(4, 5) {
        let q = quiver(n, &shape);
        let mut parallel = Vec::new();
        let paths: Vec<Path> = (2..=3).flat_map(|l| all_paths(&q, l)).collect();
        for (i, p) in paths.iter().enumerate() {
            for r in &paths[i + 1..] {
                if p.source() == r.source() && p.target() == r.target() {
                    parallel.push((p.clone(), r.clone()));
                }
            }
        }
        let Some((p, r)) = parallel.choose(&mut rng).cloned() else { continue };
        let one = f2().one();
        let mut rels = vec![Relation::new(vec![(one.clone(), p.clone()), (one, r.clone())])];
        for l in all_paths(&q, 4) {
            rels.push(Relation::monomial(f2(), l));
        }
        for m in paths.iter().filter(|x| **x != p && **x != r) {
            if rng.gen_bool(0.25) && m.len() == 3 {
                rels.push(Relation::monomial(f2(), m.clone()));
            }
        }
        if let Ok(a) = build_algebra(q, f2(), rels, DEFAULT_DEGREE_CAP) {
            if a.nilpotency() <= 4 {
                out.push(a);
            }
        }
    }
    out
}

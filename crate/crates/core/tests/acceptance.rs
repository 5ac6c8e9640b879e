//! Acceptance criteria, one PASS/FAIL line each.  Lines are written straight
//! to the process stdout so they show up even when the harness captures
//! test output.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::*;
use userial::algebra::{Algebra, Relation, build_algebra, DEFAULT_DEGREE_CAP};
use userial::ar::{
    almost_split_sequence, census_indecomposables, check_bounds, ext1, is_projective, middle_term_dichotomy, AlmostSplit,
    Dichotomy, SesOrigin, DEFAULT_CENSUS_BUDGET,
};
use userial::field::Field;
use userial::irreducibility::{check, check_1to2a, check_monomial, check_multiserial, Verdict};
use userial::linalg::Matrix;
use userial::module_rep::{decompose, direct_sum, is_isomorphic, is_isomorphic_indec, simple, Rep};
use userial::quiver::{Path, Quiver};
use userial::uniserial::{enumerate_variety, masts, phi_p, radical_embedding, MastStatus, UniserialModule, VARIETY_COORD_CAP};
use userial::Scalar;

const EXAMPLE_TIME: Duration = Duration::from_secs(5);
const MONOMIAL_TIME: Duration = Duration::from_secs(600);
const MIN_MONOMIAL_PAIRS: usize = 200;
const MIN_SES: usize = 500;
const SES_PER_ALGEBRA: usize = 6;
const RANDOM_TRIPLES: usize = 1000;
const DECOMPOSE_RERUNS: usize = 100;
const UNISERIAL_DIM_CAP: usize = 6;

fn report(lines: &mut Vec<(usize, bool)>, id: usize, name: &str, pass: bool, detail: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{} [{id}] {name}: {detail}", if pass { "PASS" } else { "FAIL" });
    let _ = out.flush();
    lines.push((id, pass));
}

/// One uniserial module `U` of a family algebra, with its ground truth.
struct Case {
    alg: usize,
    mast: Path,
    u: UniserialModule,
    oracle: bool,
    ar: Option<AlmostSplit>,
}

/// Iso-class representatives of uniserials with mast `p`, over a finite field.
fn uniserial_classes(alg: &Algebra, p: &Path) -> Vec<UniserialModule> {
    let mut reps: Vec<UniserialModule> = Vec::new();
    for pt in enumerate_variety(alg, p, VARIETY_COORD_CAP).unwrap_or_default() {
        let Ok(u) = phi_p(alg, &pt) else { continue };
        if !reps.iter().any(|r| is_isomorphic_indec(&r.rep, &u.rep)) {
            reps.push(u);
        }
    }
    reps
}

fn cases(algs: &[Algebra]) -> Vec<Case> {
    algs.par_iter()
        .enumerate()
        .flat_map_iter(|(i, alg)| {
            let op = alg.opposite().unwrap();
            let mut out = Vec::new();
            for (p, st) in masts(alg, 3) {
                if p.is_stationary() || st != MastStatus::Verified {
                    continue;
                }
                for u in uniserial_classes(alg, &p) {
                    let ar = if is_projective(alg, &u.rep) { None } else { Some(almost_split_sequence(alg, &op, &u.rep).unwrap()) };
                    let (ju, _) = radical_embedding(&u.rep);
                    // JU -> U is irreducible iff U is projective (JU -> U is then
                    // minimal right almost split) or JU is a summand of the
                    // almost split middle term.
                    let oracle = !ju.is_zero() && ar.as_ref().map_or(true, |a| a.has_summand(&ju));
                    out.push(Case { alg: i, mast: p.clone(), u, oracle, ar });
                }
            }
            out
        })
        .collect()
}

fn criterion_examples(lines: &mut Vec<(usize, bool)>) {
    let mut ok = true;
    let mut details = Vec::new();
    for (file, mast, fdelta, clause) in [
        ("example-a.qvr", vec!["a1"], vec![], "2b"),
        ("example-b.qvr", vec!["a1"], vec![], "2b"),
        ("example-c.qvr", vec!["a2", "a1"], vec![], "2b"),
        ("example-d.qvr", vec!["a2", "a1"], vec![("d1", 1)], "2b-ii"),
    ] {
        let start = Instant::now();
        let alg = load_example(file, None);
        let q = alg.quiver();
        let p = q.path_from_names(&mast).unwrap();
        let fd: Vec<(usize, Scalar)> = fdelta.iter().map(|(a, c)| (q.arrow_id(a).unwrap(), alg.field().from_i64(*c))).collect();
        let u = userial::uniserial::from_mast_and_fdelta(&alg, &p, &fd).unwrap();
        let op = alg.opposite().unwrap();
        let r = check(&alg, Some(&op), &u).unwrap();
        let failing_ok = r.verdict == Verdict::Fails && r.failing.iter().any(|c| c.starts_with(clause));
        let (ju, iota) = radical_embedding(&u.rep);
        let witness_ok = match &r.witness {
            Some(w) => w.verify(&u.rep).is_ok() && w.psi.compose(&w.phi) == iota && w.ju.dims() == ju.dims(),
            None => false,
        };
        // the almost split oracle agrees that JU -> U is not irreducible
        let ar = almost_split_sequence(&alg, &op, &u.rep).unwrap();
        let oracle_ok = !ar.has_summand(&ju);
        let t = start.elapsed();
        let this = failing_ok && witness_ok && oracle_ok && r.irreducible == Some(false) && t < EXAMPLE_TIME;
        ok &= this;
        details.push(format!(
            "{file} {} witness={} {:.2}s{}",
            r.failing.join(","),
            r.witness.as_ref().map_or("none", |w| w.tag.name()),
            t.as_secs_f64(),
            if this { "" } else { " (!)" }
        ));
    }
    report(lines, 1, "counterexamples not irreducible with verified witnesses", ok, details.join("; "));
}

fn criterion_monomial(lines: &mut Vec<(usize, bool)>, algs: &[Algebra], cs: &[Case], elapsed: Duration) {
    let start = Instant::now();
    let mut pairs = 0;
    let mut bad = Vec::new();
    for c in cs {
        let alg = &algs[c.alg];
        let o = check_monomial(alg, &c.mast).unwrap();
        pairs += 1;
        if (o.verdict == Verdict::Holds) != c.oracle {
            bad.push(format!("{} on {:?}", alg.quiver().path_name(&c.mast), alg.relations().iter().map(|r| r.display(alg.quiver())).collect::<Vec<_>>()));
        }
    }
    let t = elapsed + start.elapsed();
    let pass = bad.is_empty() && pairs >= MIN_MONOMIAL_PAIRS && t < MONOMIAL_TIME;
    report(
        lines,
        2,
        "monomial criterion vs almost split oracle",
        pass,
        format!(
            "{} algebras, {pairs} (algebra, U) pairs, {} mismatches, {:.1}s{}",
            algs.len(),
            bad.len(),
            t.as_secs_f64(),
            bad.first().map_or(String::new(), |b| format!(", first: {b}"))
        ),
    );
}

fn criterion_multiserial(lines: &mut Vec<(usize, bool)>, fams: &[(&[Algebra], &[Case])]) {
    let mut tested = 0;
    let mut skipped = 0;
    let mut bad = Vec::new();
    for (algs, cs) in fams {
        for c in cs.iter() {
            let alg = &algs[c.alg];
            match check_multiserial(alg, &c.mast) {
                Ok(o) => {
                    tested += 1;
                    if (o.verdict == Verdict::Holds) != c.oracle {
                        bad.push(format!(
                            "{} on {:?}",
                            alg.quiver().path_name(&c.mast),
                            alg.relations().iter().map(|r| r.display(alg.quiver())).collect::<Vec<_>>()
                        ));
                    }
                }
                Err(_) => skipped += 1,
            }
        }
    }
    report(
        lines,
        3,
        "multiserial criterion vs almost split oracle",
        bad.is_empty() && tested > 0,
        format!(
            "{tested} instances, {skipped} outside the hypothesis, {} mismatches{}",
            bad.len(),
            bad.first().map_or(String::new(), |b| format!(", first: {b}"))
        ),
    );
}

fn criterion_necessity(lines: &mut Vec<(usize, bool)>, fams: &[(&[Algebra], &[Case])]) {
    let mut irreducible = 0;
    let mut bad = Vec::new();
    for (algs, cs) in fams {
        for c in cs.iter().filter(|c| c.oracle) {
            let alg = &algs[c.alg];
            irreducible += 1;
            let cl = check_1to2a(alg, &c.u).unwrap();
            if let Some(f) = cl.iter().find(|x| !x.holds) {
                bad.push(format!("{}: {}", alg.quiver().path_name(&c.mast), f.id));
            }
        }
    }
    report(
        lines,
        4,
        "necessary conditions on irreducible embeddings",
        bad.is_empty() && irreducible > 0,
        format!("{irreducible} irreducible embeddings, {} violations{}", bad.len(), bad.first().map_or(String::new(), |b| format!(", first: {b}"))),
    );
}

fn criterion_bounds(lines: &mut Vec<(usize, bool)>, fams: &[(&[Algebra], &[Case])]) {
    let mut seqs = 0;
    let mut applied = std::collections::BTreeMap::<&str, usize>::new();
    let mut bad = Vec::new();
    for (algs, cs) in fams {
        for c in cs.iter() {
            let Some(ar) = &c.ar else { continue };
            let alg = &algs[c.alg];
            seqs += 1;
            let b = check_bounds(alg, &c.u, ar);
            for ch in b.checks.iter().filter(|x| x.applies) {
                *applied.entry(ch.name).or_default() += 1;
            }
            for v in b.violations() {
                bad.push(format!("{v} at {}", alg.quiver().path_name(&c.mast)));
            }
        }
    }
    let counts: Vec<String> = applied.iter().map(|(k, v)| format!("{k}={v}")).collect();
    report(
        lines,
        5,
        "bounds on the almost split middle term",
        bad.is_empty() && seqs > 0,
        format!("{seqs} sequences, {} violations, applicable: {}", bad.len(), counts.join(" ")),
    );
}

fn criterion_dichotomy(lines: &mut Vec<(usize, bool)>, fams: &[(&[Algebra], &[Case])]) {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    let mut total = 0;
    let mut two = 0;
    let mut bad = Vec::new();
    for (algs, cs) in fams {
        for (i, alg) in algs.iter().enumerate() {
            let mut here = 0;
            let f = alg.field();
            let mut ends: Vec<Rep> = (0..alg.quiver().num_vertices()).map(|v| simple(alg, v)).collect();
            ends.extend(cs.iter().filter(|c| c.alg == i).map(|c| c.u.rep.clone()));
            ends.shuffle(&mut rng);
            'pairs: for c in &ends {
                for a in &ends {
                    let e = ext1(alg, c, a);
                    let n = e.dim();
                    if n == 0 {
                        continue;
                    }
                    let mut coeffs: Vec<Vec<Scalar>> =
                        (0..n).map(|k| (0..n).map(|j| if j == k { f.one() } else { f.zero() }).collect()).collect();
                    if n > 1 {
                        let mut v: Vec<Scalar> = (0..n).map(|_| f.from_i64(rng.gen_range(0..2))).collect();
                        if v.iter().all(Scalar::is_zero) {
                            v[0] = f.one();
                        }
                        coeffs.push(v);
                    }
                    for co in coeffs {
                        let ses = e.sequence(&e.class(&co), SesOrigin::ExtBasis);
                        total += 1;
                        match middle_term_dichotomy(&ses) {
                            Ok(Dichotomy::Indecomposable) if ses.is_exact() && !ses.is_split() => {}
                            Ok(Dichotomy::TwoUniserials) if ses.is_exact() => two += 1,
                            other => bad.push(format!("{:?} -> {:?}: {other:?}", c.dims(), a.dims())),
                        }
                        here += 1;
                        if here >= SES_PER_ALGEBRA {
                            break 'pairs;
                        }
                    }
                }
            }
        }
    }
    report(
        lines,
        6,
        "middle terms of extensions between uniserials",
        bad.is_empty() && total >= MIN_SES,
        format!("{total} sequences over F2, {two} with two uniserial summands, {} violations", bad.len()),
    );
}

/// Brute force: census modules of dimension `len p + 1` that are uniserial
/// with `p` acting nonzero.
fn census_classes_with_mast(census: &[Rep], p: &Path) -> Vec<usize> {
    (0..census.len())
        .filter(|&i| {
            let m = &census[i];
            m.total_dim() == p.len() + 1 && m.is_uniserial() && !m.path_matrix(p).is_zero()
        })
        .collect()
}

fn criterion_phi_surjective(lines: &mut Vec<(usize, bool)>, algs: &[&Algebra]) {
    let results: Vec<(usize, usize, usize, Vec<String>)> = algs
        .par_iter()
        .map(|alg| {
            let c = match census_indecomposables(alg, 4, DEFAULT_CENSUS_BUDGET) {
                Ok(c) if c.exhaustive => c,
                _ => return (0, 0, 1, vec![]),
            };
            let (mut masts_n, mut classes, mut bad) = (0, 0, Vec::new());
            for (p, st) in masts(alg, 3) {
                if st != MastStatus::Verified {
                    continue;
                }
                masts_n += 1;
                let ours = uniserial_classes(alg, &p);
                let brute = census_classes_with_mast(&c.modules, &p);
                classes += ours.len();
                let mut hit: Vec<usize> = ours.iter().filter_map(|u| c.find(&u.rep)).collect();
                hit.sort();
                hit.dedup();
                if hit.len() != ours.len() || hit != brute {
                    bad.push(format!("{}: {} classes vs {} brute force", alg.quiver().path_name(&p), ours.len(), brute.len()));
                }
            }
            (masts_n, classes, 0, bad)
        })
        .collect();
    let masts_n: usize = results.iter().map(|r| r.0).sum();
    let classes: usize = results.iter().map(|r| r.1).sum();
    let skipped: usize = results.iter().map(|r| r.2).sum();
    let bad: Vec<&String> = results.iter().flat_map(|r| &r.3).collect();
    report(
        lines,
        7,
        "variety points cover all uniserials (brute-force census)",
        bad.is_empty() && masts_n > 0,
        format!(
            "{} algebras ({skipped} with truncated census skipped), {masts_n} masts, {classes} classes, {} mismatches{}",
            algs.len() - skipped,
            bad.len(),
            bad.first().map_or(String::new(), |b| format!(", first: {b}"))
        ),
    );
}

fn random_elem(alg: &Algebra, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    let f = alg.field();
    (0..alg.dim())
        .map(|_| if rng.gen_bool(0.4) { f.from_i64(rng.gen_range(-3..4)) } else { f.zero() })
        .collect()
}

fn random_walk(q: &Quiver, rng: &mut ChaCha8Rng) -> Path {
    let mut p = q.stationary(rng.gen_range(0..q.num_vertices()));
    for _ in 0..rng.gen_range(0..6) {
        let out: Vec<usize> = q.arrows_from(p.target()).collect();
        let Some(&a) = out.choose(rng) else { break };
        p = p.extend(q, a);
    }
    p
}

fn normal_forms_ok(alg: &Algebra, rng: &mut ChaCha8Rng) -> bool {
    let f = alg.field();
    let q = alg.quiver();
    for _ in 0..RANDOM_TRIPLES {
        let (x, y, z) = (random_elem(alg, rng), random_elem(alg, rng), random_elem(alg, rng));
        if alg.mul(&alg.mul(&x, &y), &z) != alg.mul(&x, &alg.mul(&y, &z)) {
            return false;
        }
        let w = random_walk(q, rng);
        let e = alg.normal_form(&[(f.one(), w)]);
        let terms: Vec<(Scalar, Path)> =
            e.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (c.clone(), alg.basis_path(i).clone())).collect();
        if alg.normal_form(&terms) != e {
            return false;
        }
    }
    (0..alg.dim()).all(|i| alg.normal_form(&[(f.one(), alg.basis_path(i).clone())]) == alg.basis_elem(i))
}

/// All subspaces of `F_2^d` as bitmasks over the `2^d` vectors.
fn subspaces(d: usize) -> Vec<u64> {
    let mut seen = std::collections::BTreeSet::new();
    let mut frontier = vec![1u64];
    seen.insert(1u64);
    while let Some(s) = frontier.pop() {
        for v in 0..(1u64 << d) {
            if s >> v & 1 == 1 {
                continue;
            }
            let mut t = s;
            for w in 0..(1u64 << d) {
                if s >> w & 1 == 1 {
                    t |= 1 << (w ^ v);
                }
            }
            if seen.insert(t) {
                frontier.push(t);
            }
        }
    }
    seen.into_iter().collect()
}

/// Arrow matrix as columns of bit vectors: `apply(v) = xor of columns in v`.
fn apply_bits(cols: &[u64], v: u64) -> u64 {
    cols.iter().enumerate().filter(|(j, _)| v >> j & 1 == 1).fold(0, |acc, (_, c)| acc ^ c)
}

/// Uniserial iff the lattice of graded arrow-stable subspaces is a chain.
fn lattice_is_chain(q: &Quiver, dims: &[usize], cols: &[Vec<u64>], subs: &[Vec<u64>]) -> bool {
    let nv = dims.len();
    let mut lattice: Vec<Vec<u64>> = Vec::new();
    let mut idx = vec![0usize; nv];
    loop {
        let pick: Vec<u64> = (0..nv).map(|v| subs[dims[v]][idx[v]]).collect();
        let stable = (0..q.num_arrows()).all(|a| {
            let ar = q.arrow(a);
            (0..(1u64 << dims[ar.source])).filter(|&x| pick[ar.source] >> x & 1 == 1).all(|x| pick[ar.target] >> apply_bits(&cols[a], x) & 1 == 1)
        });
        if stable {
            lattice.push(pick);
        }
        let mut k = 0;
        loop {
            if k == nv {
                return lattice.iter().enumerate().all(|(i, a)| {
                    lattice[i + 1..].iter().all(|b| {
                        let ab = a.iter().zip(b).all(|(x, y)| x & y == *x);
                        let ba = a.iter().zip(b).all(|(x, y)| x & y == *y);
                        ab || ba
                    })
                });
            }
            idx[k] += 1;
            if idx[k] < subs[dims[k]].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn dim_vectors(nv: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..nv {
        out = out.into_iter().flat_map(|d: Vec<usize>| (0..=cap).map(move |k| [d.clone(), vec![k]].concat())).collect();
    }
    out.into_iter().filter(|d| (1..=cap).contains(&d.iter().sum())).collect()
}

/// (modules compared, disagreements)
fn uniserial_oracle_sweep(alg: &Algebra, subs: &[Vec<u64>]) -> (usize, usize) {
    let q = alg.quiver();
    let f = alg.field();
    let mut checked = 0;
    let mut bad = 0;
    for dims in dim_vectors(q.num_vertices(), UNISERIAL_DIM_CAP) {
        let sizes: Vec<(usize, usize)> = q.arrows().iter().map(|a| (dims[a.target], dims[a.source])).collect();
        let bits: usize = sizes.iter().map(|(r, c)| r * c).sum();
        let res: Vec<(usize, usize)> = (0..1u64 << bits)
            .into_par_iter()
            .map(|code| {
                let mut off = 0;
                let mut maps = Vec::new();
                let mut cols = Vec::new();
                for &(r, c) in &sizes {
                    let mut m = Matrix::zeros(f, r, c);
                    let mut cb = vec![0u64; c];
                    for i in 0..r {
                        for j in 0..c {
                            if code >> (off + i * c + j) & 1 == 1 {
                                m[(i, j)] = f.one();
                                cb[j] |= 1 << i;
                            }
                        }
                    }
                    off += r * c;
                    maps.push(m);
                    cols.push(cb);
                }
                let rep = Rep::new(alg.quiver_arc(), f, dims.clone(), maps).unwrap();
                if !rep.is_valid(alg) {
                    return (0, 0);
                }
                let oracle = lattice_is_chain(q, &dims, &cols, subs);
                (1, usize::from(oracle != rep.is_uniserial()))
            })
            .collect();
        checked += res.iter().map(|r| r.0).sum::<usize>();
        bad += res.iter().map(|r| r.1).sum::<usize>();
    }
    (checked, bad)
}

fn random_invertible(f: Field, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let mut m = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f.from_i64(rng.gen_range(0..2));
            }
        }
        if m.inverse().is_some() {
            return m;
        }
    }
}

fn decompose_reruns(alg: &Algebra, rng: &mut ChaCha8Rng) -> (usize, usize) {
    let c = census_indecomposables(alg, 3, DEFAULT_CENSUS_BUDGET).unwrap();
    let pick: Vec<&Rep> = [1usize, 3, 3, 5, 7].iter().map(|&i| &c.modules[i % c.modules.len()]).collect();
    let mut expected: Vec<usize> = pick.iter().map(|m| c.find(m).unwrap()).collect();
    expected.sort();
    let mut good = 0;
    for _ in 0..DECOMPOSE_RERUNS {
        let mut order = pick.clone();
        order.shuffle(rng);
        let sum = direct_sum(&order).rep;
        let change: Vec<Matrix> = sum.dims().iter().map(|&d| random_invertible(alg.field(), d, rng)).collect();
        let m = sum.transport(&change);
        let parts = decompose(&m);
        let mut got: Vec<usize> = parts.iter().filter_map(|s| c.find(&s.rep)).collect();
        got.sort();
        let back = direct_sum(&parts.iter().map(|s| &s.rep).collect::<Vec<_>>()).rep;
        if got == expected && is_isomorphic(&back, &m) {
            good += 1;
        }
    }
    (good, DECOMPOSE_RERUNS)
}

fn small_algebra(vertices: &[&str], arrows: &[(&str, &str, &str)], zero: &[&[&str]]) -> Algebra {
    let q = Quiver::new(vertices, arrows).unwrap();
    let rels = zero.iter().map(|p| Relation::monomial(f2(), q.path_from_names(p).unwrap())).collect();
    build_algebra(q, f2(), rels, DEFAULT_DEGREE_CAP).unwrap()
}

fn criterion_infrastructure(lines: &mut Vec<(usize, bool)>, family: &[Algebra]) {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut nf_algs: Vec<Algebra> = Vec::new();
    for f in [None, Some("F2"), Some("F3")] {
        for e in ["example-a.qvr", "example-b.qvr", "example-c.qvr", "example-d.qvr"] {
            nf_algs.push(load_example(e, f));
        }
    }
    nf_algs.extend(family.iter().step_by(family.len() / 6 + 1).cloned());
    let nf_bad = nf_algs.iter().filter(|a| !normal_forms_ok(a, &mut rng)).count();

    let subs: Vec<Vec<u64>> = (0..=UNISERIAL_DIM_CAP).map(subspaces).collect();
    let oracle_algs = [
        small_algebra(&["1", "2"], &[("a", "1", "2")], &[]),
        small_algebra(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[]),
        small_algebra(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[&["b", "a"]]),
        small_algebra(&["1", "2", "3"], &[("a", "1", "2"), ("b", "3", "2")], &[]),
        small_algebra(&["1", "2", "3"], &[("a", "2", "1"), ("b", "2", "3")], &[]),
        small_algebra(&["1", "2"], &[("x", "1", "2"), ("y", "1", "2")], &[]),
    ];
    let (mut checked, mut uni_bad) = (0, 0);
    for a in &oracle_algs {
        let (c, b) = uniserial_oracle_sweep(a, &subs);
        checked += c;
        uni_bad += b;
    }

    let dec_algs = [load_example("example-d.qvr", Some("F2")), small_algebra(&["1", "2"], &[("x", "1", "2"), ("y", "1", "2")], &[])];
    let (mut good, mut runs) = (0, 0);
    for a in &dec_algs {
        let (g, r) = decompose_reruns(a, &mut rng);
        good += g;
        runs += r;
    }
    report(
        lines,
        8,
        "infrastructure properties",
        nf_bad == 0 && uni_bad == 0 && good == runs,
        format!(
            "normal forms: {} algebras x {RANDOM_TRIPLES} triples, {nf_bad} failing; is_uniserial: {checked} modules of dim <= {UNISERIAL_DIM_CAP} over F2, {uni_bad} disagreements; decompose: {good}/{runs} reruns agree",
            nf_algs.len()
        ),
    );
}

#[test]
fn acceptance() {
    let mut lines = Vec::new();
    criterion_examples(&mut lines);

    let start = Instant::now();
    let mono = monomial_family(2);
    let mono_cases = cases(&mono);
    let mono_time = start.elapsed();
    criterion_monomial(&mut lines, &mono, &mono_cases, mono_time);

    let mut bino = binomial_family(3);
    for e in ["example-a.qvr", "example-b.qvr", "example-c.qvr", "example-d.qvr"] {
        bino.push(load_example(e, Some("F2")));
    }
    let bino_cases = cases(&bino);
    let fams: [(&[Algebra], &[Case]); 2] = [(&mono, &mono_cases), (&bino, &bino_cases)];
    criterion_multiserial(&mut lines, &fams);
    criterion_necessity(&mut lines, &fams);
    criterion_bounds(&mut lines, &fams);
    criterion_dichotomy(&mut lines, &fams);

    let mut phi_algs: Vec<&Algebra> = mono.iter().step_by(3).collect();
    phi_algs.extend(bino.iter().step_by(2));
    criterion_phi_surjective(&mut lines, &phi_algs);
    criterion_infrastructure(&mut lines, &mono);

    let failed: Vec<usize> = lines.iter().filter(|l| !l.1).map(|l| l.0).collect();
    assert_eq!(lines.len(), 8);
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

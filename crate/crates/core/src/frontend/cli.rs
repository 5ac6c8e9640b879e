//! The `userial` command line.
//!
//! Exit codes: 0 success, 1 an `--expect` demand was not met, 2 usage, parse
//! or input errors, 3 internal invariant violations (a failed verification or
//! a panic).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::Algebra;
use crate::ar::{almost_split_sequence, census_indecomposables, is_projective, DEFAULT_CENSUS_BUDGET};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::irreducibility::{check, CriterionReport, Verdict};
use crate::module_rep::{injective, projective, simple, Rep};
use crate::quiver::{detours, Path};
use crate::uniserial::{
    enumerate_variety, fdelta_of, find_point, from_mast_and_fdelta, masts, phi_p, UniserialModule, UniserialPoint,
    VARIETY_COORD_CAP,
};

use super::parse::{parse, parse_assignments, parse_module_spec, parse_path, parse_scalar, Diagnostic, ModuleSpec, SourceSpec};
use super::report::*;

#[derive(Parser, Debug)]
#[command(name = "userial", version, about = "Uniserial modules and irreducible radical embeddings over bound quiver algebras")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Expect {
    Holds,
    Fails,
    Unknown,
    Irreducible,
    Reducible,
    Witness,
}

#[derive(clap::Args, Debug)]
struct ModuleArgs {
    /// Mast, written right to left (`a2*a1`) or `e_v` for a simple.
    #[arg(long)]
    mast: String,
    /// Detour coordinates of a point of the variety, comma separated in the
    /// order listed by `uniserials`.
    #[arg(long, conflicts_with = "fdelta")]
    point: Option<String>,
    /// `f_δ(1)` values such as `d1=1,d2=0`; unlisted arrows act as zero.
    #[arg(long)]
    fdelta: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Parse and build the algebra.
    Validate { file: String },
    /// Basis, nilpotency degree and radical series.
    Algebra { file: String },
    /// Nonzero paths that are masts of some uniserial module.
    Masts {
        file: String,
        #[arg(long)]
        maxlen: Option<usize>,
    },
    /// Points of the variety of a mast and their isomorphism classes.
    Uniserials {
        file: String,
        #[arg(long)]
        mast: String,
        #[arg(long)]
        enumerate: bool,
    },
    /// Decide irreducibility of the radical embedding of a uniserial module.
    Check {
        file: String,
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Emit a verified factorization witness when the embedding is not irreducible.
    Witness {
        file: String,
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Almost split sequence ending in a module, with the bounds on its middle term.
    Ar {
        file: String,
        /// `simple:V`, `projective:V`, `injective:V` or `mast:PATH[@d=c,...]`.
        #[arg(long)]
        module: String,
        /// Certify the sequence against a census of this dimension cap.
        #[arg(long)]
        certify: Option<usize>,
    },
    /// Brute-force list of indecomposables up to a total dimension.
    Census {
        file: String,
        #[arg(long)]
        dim_cap: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn init_threads() {
    if let Some(n) = std::env::var("USERIAL_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Verification(_) => 3,
        _ => 2,
    }
}

/// Run the CLI on `args` (including the program name) without touching the
/// process streams.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    init_threads();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match catch_unwind(AssertUnwindSafe(|| execute(&cli))) {
        Ok(Ok((stdout, code))) => Outcome { code, stdout, stderr: String::new() },
        Ok(Err(e)) => Outcome { code: error_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Outcome { code: 3, stdout: String::new(), stderr: format!("internal error: {msg}\n") }
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

fn located(file: &str, d: Diagnostic) -> Error {
    Error::Parse(format!("{file}:{d}"))
}

fn load_file(file: &str) -> Result<(SourceSpec, Algebra)> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Parse(format!("{file}: {e}")))?;
    let spec = parse(&text).map_err(|d| located(file, d))?;
    let alg = spec.build()?;
    Ok((spec, alg))
}

fn arg_error(flag: &str, d: Diagnostic) -> Error {
    Error::Parse(format!("{flag} {}: {}", d.pos.col, d.message))
}

fn coord_cap(spec: &SourceSpec) -> usize {
    spec.options.coord_cap.unwrap_or(VARIETY_COORD_CAP)
}

fn default_module(alg: &Algebra, spec: &SourceSpec, p: &Path) -> Result<UniserialModule> {
    if alg.is_triangular() {
        if let Ok(u) = from_mast_and_fdelta(alg, p, &[]) {
            return Ok(u);
        }
    }
    let pt = find_point(alg, p, coord_cap(spec))
        .ok_or_else(|| Error::Hypotheses(format!("no uniserial module with mast {} found", alg.quiver().path_name(p))))?;
    phi_p(alg, &pt)
}

fn build_module(alg: &Algebra, spec: &SourceSpec, args: &ModuleArgs) -> Result<UniserialModule> {
    let q = alg.quiver();
    let p = parse_path(q, &args.mast).map_err(|d| arg_error("--mast", d))?;
    if let Some(text) = &args.point {
        let ds = detours(q, &p);
        let flat: Vec<Scalar> = if text.trim().is_empty() {
            Vec::new()
        } else {
            text.split(',')
                .map(|s| parse_scalar(alg.field(), s.trim()).map_err(|d| arg_error("--point", d)))
                .collect::<Result<_>>()?
        };
        let need: usize = ds.iter().map(|d| d.v_family.len()).sum();
        if flat.len() != need {
            return Err(Error::Dimension(format!("--point needs {need} coordinates, got {}", flat.len())));
        }
        let mut it = flat.into_iter();
        let scalars = ds.iter().map(|d| (0..d.v_family.len()).map(|_| it.next().unwrap()).collect()).collect();
        return phi_p(alg, &UniserialPoint::new(alg, &p, scalars)?);
    }
    if let Some(text) = &args.fdelta {
        let mut fd = Vec::new();
        for (name, pos, v) in parse_assignments(alg.field(), text).map_err(|d| arg_error("--fdelta", d))? {
            let a = q.arrow_id(&name).map_err(|_| Error::Parse(format!("--fdelta {}: unknown arrow `{name}`", pos.col)))?;
            fd.push((a, v));
        }
        return from_mast_and_fdelta(alg, &p, &fd);
    }
    default_module(alg, spec, &p)
}

/// A mast for a uniserial representation: the longest path acting nonzero on a top vector.
fn mast_of(alg: &Algebra, m: &Rep) -> Option<Path> {
    if m.is_zero() || !m.is_uniserial() {
        return None;
    }
    let q = alg.quiver();
    let top = m.top_dims();
    let v = (0..q.num_vertices()).find(|&v| top[v] > 0)?;
    let len = m.total_dim() - 1;
    let rad = m.radical();
    let f = m.field();
    let x = (0..m.dim_at(v))
        .map(|i| {
            let mut c = vec![f.zero(); m.dim_at(v)];
            c[i] = f.one();
            c
        })
        .find(|c| !rad.parts[v].contains(c))?;
    let x = m.embed(v, &x);
    q.paths_from(v, len).into_iter().find(|p| p.len() == len && m.act_path(p, &x).iter().any(|c| !c.is_zero()))
}

fn envelope<T: Serialize>(command: &str, spec: &SourceSpec, result: T) -> String {
    emit_report(&Envelope { command, path_order: PATH_ORDER, field: spec.field.label(), result })
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "undecided",
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::Unknown => "unknown",
    }
}

fn meets(e: Expect, r: &CriterionReport, verified: Option<bool>) -> bool {
    match e {
        Expect::Holds => r.verdict == Verdict::Holds,
        Expect::Fails => r.verdict == Verdict::Fails,
        Expect::Unknown => r.verdict == Verdict::Unknown,
        Expect::Irreducible => r.irreducible == Some(true),
        Expect::Reducible => r.irreducible == Some(false),
        Expect::Witness => verified == Some(true),
    }
}

fn check_report(alg: &Algebra, spec: &SourceSpec, args: &ModuleArgs) -> Result<(UniserialModule, CriterionReport, CheckReport)> {
    let u = build_module(alg, spec, args)?;
    let op = alg.opposite().ok();
    let r = check(alg, op.as_ref(), &u)?;
    let verified = match &r.witness {
        Some(w) => match w.verify(&u.rep) {
            Ok(()) => Some(true),
            Err(e) => return Err(Error::Verification(format!("emitted witness does not verify: {e}"))),
        },
        None => None,
    };
    let q = alg.quiver();
    let fdelta = if alg.is_triangular() {
        fdelta_of(alg, &u).map(|v| v.into_iter().map(|(a, c)| (q.arrow(a).name.clone(), c)).collect()).unwrap_or_default()
    } else {
        Vec::new()
    };
    let cr = CheckReport {
        mast: q.path_name(u.mast()),
        module: u.rep.to_json(),
        fdelta,
        coordinates: u.point.labels(alg),
        report: r.to_json(),
        witness_verified: verified,
    };
    Ok((u, r, cr))
}

fn check_text(out: &mut String, alg: &Algebra, r: &CriterionReport, cr: &CheckReport) {
    let _ = alg;
    let theorem = serde_json::to_value(r.theorem).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
    let _ = writeln!(out, "mast: {}", cr.mast);
    let _ = writeln!(out, "dimension vector: {:?}", cr.module.dims);
    if !cr.fdelta.is_empty() {
        let fd: Vec<String> = cr.fdelta.iter().map(|(a, c)| format!("{a}={c}")).collect();
        let _ = writeln!(out, "f_delta: {}", fd.join(", "));
    }
    let _ = writeln!(out, "verdict: {} ({theorem}{})", verdict_name(r.verdict), if r.conjectural { ", conjectural" } else { "" });
    let _ = writeln!(out, "irreducible: {}", yes_no(r.irreducible));
    for c in &r.clauses {
        let _ = writeln!(out, "  [{}] {}: {}", if c.holds { "ok" } else { "FAIL" }, c.id, c.detail);
    }
    if let Some(w) = &r.witness {
        let _ = writeln!(
            out,
            "witness: {} for clause {}, dim V = {} {:?}, verified",
            w.tag.name(),
            w.clause,
            w.v.total_dim(),
            w.v.dims()
        );
    }
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    let _ = writeln!(out, "path order: {PATH_ORDER}");
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    let mut out = String::new();
    let mut code = 0;
    match &cli.cmd {
        Cmd::Validate { file } => {
            let (spec, alg) = load_file(file)?;
            let r = validate_report(&alg);
            if cli.json {
                out = envelope("validate", &spec, r);
            } else {
                let _ = writeln!(
                    out,
                    "ok: field {}, {} vertices, {} arrows, {} relations, dim {}",
                    spec.field.label(),
                    r.vertices.len(),
                    r.arrows.len(),
                    r.relations.len(),
                    r.dim
                );
            }
        }
        Cmd::Algebra { file } => {
            let (spec, alg) = load_file(file)?;
            let r = algebra_report(&alg);
            if cli.json {
                out = envelope("algebra", &spec, r);
            } else {
                let _ = writeln!(out, "dim: {}", r.dim);
                let _ = writeln!(out, "basis: {}", r.basis.join(" "));
                let _ = writeln!(out, "nilpotency N: {}", r.nilpotency);
                let _ = writeln!(out, "radical series dims: {:?}", r.radical_series);
                let _ = writeln!(out, "projective dims: {:?}", r.projective_dims);
                let _ = writeln!(out, "triangular: {}, monomial: {}", r.triangular, r.monomial);
                match r.multiserial_m {
                    Some(m) => {
                        let _ = writeln!(out, "left multiserial: m = {m}");
                    }
                    None => {
                        let _ = writeln!(out, "left multiserial: no");
                    }
                }
                let _ = writeln!(out, "path order: {PATH_ORDER}");
            }
        }
        Cmd::Masts { file, maxlen } => {
            let (spec, alg) = load_file(file)?;
            let l = maxlen.unwrap_or(alg.nilpotency().saturating_sub(1));
            let found = masts(&alg, l);
            let r = masts_report(alg.quiver(), &found);
            if cli.json {
                out = envelope("masts", &spec, r);
            } else {
                for m in r {
                    let _ = writeln!(out, "{} {}", m.path, serde_json::to_value(m.status).unwrap().as_str().unwrap());
                }
            }
        }
        Cmd::Uniserials { file, mast, enumerate } => {
            let (spec, alg) = load_file(file)?;
            let p = parse_path(alg.quiver(), mast).map_err(|d| arg_error("--mast", d))?;
            let points = if *enumerate {
                enumerate_variety(&alg, &p, coord_cap(&spec))?
            } else {
                find_point(&alg, &p, coord_cap(&spec)).into_iter().collect()
            };
            let r = uniserials_report(&alg, &p, &points, *enumerate)?;
            if cli.json {
                out = envelope("uniserials", &spec, r);
            } else {
                let _ = writeln!(out, "mast: {}", r.mast);
                let _ = writeln!(out, "detours: {}", if r.detours.is_empty() { "none".into() } else { r.detours.join(" ") });
                let _ = writeln!(out, "coordinates: {}", r.coordinates);
                if r.points.is_empty() {
                    let _ = writeln!(out, "no point found");
                }
                for pt in &r.points {
                    let c: Vec<String> = pt.coordinates.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let _ = writeln!(out, "point [{}] -> class {}", c.join(", "), pt.class);
                }
                let _ = writeln!(out, "isomorphism classes: {}", r.classes.len());
            }
        }
        Cmd::Check { file, module, expect } | Cmd::Witness { file, module, expect } => {
            let witness_only = matches!(cli.cmd, Cmd::Witness { .. });
            let (spec, alg) = load_file(file)?;
            let (_, r, cr) = check_report(&alg, &spec, module)?;
            if let Some(e) = expect {
                if !meets(*e, &r, cr.witness_verified) {
                    code = 1;
                }
            }
            if cli.json {
                out = if witness_only {
                    envelope("witness", &spec, &cr.report.witness)
                } else {
                    envelope("check", &spec, &cr)
                };
            } else if witness_only {
                match &r.witness {
                    Some(w) => {
                        let _ = writeln!(out, "construction: {}", w.tag.name());
                        let _ = writeln!(out, "clause: {}", w.clause);
                        let _ = writeln!(out, "V dimension vector: {:?}", w.v.dims());
                        let _ = writeln!(out, "JU dimension vector: {:?}", w.ju.dims());
                        for (k, v) in &w.scalars {
                            let _ = writeln!(out, "scalar {k} = {v}");
                        }
                        let _ = writeln!(out, "verified: psi*phi = radical embedding, phi not split mono, psi not split epi");
                    }
                    None => {
                        let _ = writeln!(out, "no witness (verdict {}, irreducible: {})", verdict_name(r.verdict), yes_no(r.irreducible));
                        for n in &r.notes {
                            let _ = writeln!(out, "note: {n}");
                        }
                    }
                }
            } else {
                check_text(&mut out, &alg, &r, &cr);
            }
        }
        Cmd::Ar { file, module, certify } => {
            let (spec, alg) = load_file(file)?;
            let q = alg.quiver();
            let ms = parse_module_spec(q, alg.field(), module).map_err(|d| arg_error("--module", d))?;
            let (m, u) = match ms {
                ModuleSpec::Simple(v) => (simple(&alg, v), None),
                ModuleSpec::Projective(v) => (projective(&alg, v), None),
                ModuleSpec::Injective(v) => (injective(&alg, v), None),
                ModuleSpec::Mast { path, fdelta } => {
                    let u = if fdelta.is_empty() { default_module(&alg, &spec, &path)? } else { from_mast_and_fdelta(&alg, &path, &fdelta)? };
                    (u.rep.clone(), Some(u))
                }
            };
            let u = match u {
                Some(u) => Some(u),
                None => mast_of(&alg, &m).map(|p| UniserialModule::from_rep(&alg, m.clone(), &p)).transpose()?,
            };
            let ar = if is_projective(&alg, &m) {
                None
            } else {
                let op = alg.opposite()?;
                let mut ar = almost_split_sequence(&alg, &op, &m)?;
                if let Some(d) = certify {
                    let budget = spec.options.census_budget.unwrap_or(DEFAULT_CENSUS_BUDGET);
                    ar.certify(&census_indecomposables(&alg, *d, budget)?)?;
                }
                Some(ar)
            };
            let r = ar_report(&alg, &m, ar.as_ref(), u.as_ref());
            if let Some(b) = &r.bounds {
                if !b.violations().is_empty() {
                    return Err(Error::Verification(format!("bounds violated: {}", b.violations().join(", "))));
                }
            }
            if cli.json {
                out = envelope("ar", &spec, r);
            } else {
                let _ = writeln!(out, "module dimension vector: {:?}", r.module.dims);
                match (&r.dtr, r.alpha) {
                    (Some(d), Some(a)) => {
                        let _ = writeln!(out, "DTr dimension vector: {:?}", d.dims);
                        let _ = writeln!(out, "middle term dimension vector: {:?}", r.middle.as_ref().unwrap().dims);
                        let _ = writeln!(out, "alpha={a}");
                        let _ = writeln!(out, "summands: {:?}", r.summand_dims);
                    }
                    _ => {
                        let _ = writeln!(out, "projective: no almost split sequence ends here");
                    }
                }
                if let Some(b) = &r.bounds {
                    for c in b.checks.iter().filter(|c| c.applies) {
                        let _ = writeln!(out, "  [{}] {}: {}", if c.holds { "ok" } else { "FAIL" }, c.name, c.detail);
                    }
                }
            }
        }
        Cmd::Census { file, dim_cap, budget } => {
            let (spec, alg) = load_file(file)?;
            let budget = budget.or(spec.options.census_budget).unwrap_or(DEFAULT_CENSUS_BUDGET);
            let c = census_indecomposables(&alg, *dim_cap, budget)?;
            let r = census_report(&alg, &c);
            if cli.json {
                out = envelope("census", &spec, r);
            } else {
                let _ = writeln!(out, "indecomposables up to dimension {}: {}", r.dim_cap, r.modules.len());
                if !r.exhaustive {
                    let _ = writeln!(out, "partial: skipped dimension vectors {:?}", r.skipped);
                }
                for m in &r.modules {
                    let _ = writeln!(
                        out,
                        "#{} {:?}{}{}",
                        m.id,
                        m.dims,
                        if m.uniserial { " uniserial" } else { "" },
                        if m.projective { " projective" } else { "" }
                    );
                }
            }
        }
    }
    Ok((out, code))
}

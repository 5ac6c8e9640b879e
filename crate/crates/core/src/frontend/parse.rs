//! The `.qvr` text format.
//!
//! ```text
//! # Example (d)
//! field Q
//! vertices 1 2 3 4
//! arrows a1:1->2 a2:2->3 d1:2->3 b1:3->4
//! relations
//!   d1*a1 - a2*a1;
//! options degree_cap=16
//! ```
//!
//! Products are written right to left: `b*a` is "first `a`, then `b`", the
//! same order in which [`Path`] stores its arrows.  Statements may be split by
//! newlines or `;`, so the whole file above also fits on one line.  `#` starts
//! a comment that runs to the end of the line.

use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{build_algebra, Algebra, Relation, DEFAULT_DEGREE_CAP, DEFAULT_PATH_CAP};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::quiver::{Path, Quiver};

const KEYWORDS: [&str; 5] = ["field", "vertices", "arrows", "relations", "options"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub pos: Pos,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)
    }
}

impl From<Diagnostic> for Error {
    fn from(d: Diagnostic) -> Error {
        Error::Parse(d.to_string())
    }
}

fn diag<T>(pos: Pos, message: impl Into<String>) -> std::result::Result<T, Diagnostic> {
    Err(Diagnostic { pos, message: message.into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Colon,
    Arrow,
    Star,
    Plus,
    Minus,
    Slash,
    Eq,
    Comma,
    At,
    Semi,
    Newline,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("`{w}`"),
            Tok::Colon => "`:`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Star => "`*`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Comma => "`,`".into(),
            Tok::At => "`@`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Newline => "end of line".into(),
        }
    }
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str) -> std::result::Result<Vec<(Tok, Pos)>, Diagnostic> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    while let Some(c) = chars.next() {
        let pos = Pos { line, col };
        col += 1;
        let tok = match c {
            '\n' => {
                line += 1;
                col = 1;
                Tok::Newline
            }
            '#' => {
                while let Some(&n) = chars.peek() {
                    if n == '\n' {
                        break;
                    }
                    chars.next();
                }
                continue;
            }
            c if c.is_whitespace() => continue,
            ':' => Tok::Colon,
            '*' => Tok::Star,
            '+' => Tok::Plus,
            '/' => Tok::Slash,
            '=' => Tok::Eq,
            ',' => Tok::Comma,
            '@' => Tok::At,
            ';' => Tok::Semi,
            '-' => {
                if chars.peek() == Some(&'>') {
                    chars.next();
                    col += 1;
                    Tok::Arrow
                } else {
                    Tok::Minus
                }
            }
            c if is_word_char(c) => {
                let mut w = String::from(c);
                while let Some(&n) = chars.peek() {
                    if !is_word_char(n) {
                        break;
                    }
                    w.push(n);
                    chars.next();
                    col += 1;
                }
                Tok::Word(w)
            }
            other => return diag(pos, format!("unexpected character {other:?}")),
        };
        out.push((tok, pos));
    }
    Ok(out)
}

struct Cursor {
    toks: Vec<(Tok, Pos)>,
    i: usize,
    end: Pos,
}

impl Cursor {
    fn new(text: &str) -> std::result::Result<Cursor, Diagnostic> {
        let toks = lex(text)?;
        let lines = text.split('\n').collect::<Vec<_>>();
        let end = Pos { line: lines.len(), col: lines.last().map_or(0, |l| l.chars().count()) + 1 };
        Ok(Cursor { toks, i: 0, end })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.0)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.i).map_or(self.end, |t| t.1)
    }

    fn next(&mut self) -> Option<(Tok, Pos)> {
        let t = self.toks.get(self.i).cloned();
        if t.is_some() {
            self.i += 1;
        }
        t
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(Tok::Newline | Tok::Semi)) {
            self.i += 1;
        }
    }

    fn skip_newlines(&mut self) {
        while matches!(self.peek(), Some(Tok::Newline)) {
            self.i += 1;
        }
    }

    fn at_keyword(&self) -> Option<&str> {
        match self.peek() {
            Some(Tok::Word(w)) if KEYWORDS.contains(&w.as_str()) => Some(KEYWORDS.iter().find(|k| **k == w).unwrap()),
            _ => None,
        }
    }

    fn found(&self) -> String {
        self.peek().map_or("end of input".into(), Tok::describe)
    }

    fn word(&mut self, what: &str) -> std::result::Result<(String, Pos), Diagnostic> {
        match self.next() {
            Some((Tok::Word(w), p)) => Ok((w, p)),
            Some((t, p)) => diag(p, format!("expected {what}, found {}", t.describe())),
            None => diag(self.end, format!("expected {what}, found end of input")),
        }
    }

    fn expect(&mut self, tok: Tok) -> std::result::Result<Pos, Diagnostic> {
        match self.next() {
            Some((t, p)) if t == tok => Ok(p),
            Some((t, p)) => diag(p, format!("expected {}, found {}", tok.describe(), t.describe())),
            None => diag(self.end, format!("expected {}, found end of input", tok.describe())),
        }
    }

    fn done(&self) -> bool {
        self.i >= self.toks.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDecl {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// One term `c * path`; `path` lists arrow names as written, leftmost last applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermSpec {
    pub coeff: Scalar,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSpec {
    pub terms: Vec<TermSpec>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub degree_cap: Option<usize>,
    pub path_cap: Option<usize>,
    pub coord_cap: Option<usize>,
    pub census_budget: Option<u64>,
}

impl Options {
    const KEYS: [&'static str; 4] = ["degree_cap", "path_cap", "coord_cap", "census_budget"];

    fn entries(&self) -> Vec<(&'static str, u64)> {
        let vals = [
            self.degree_cap.map(|v| v as u64),
            self.path_cap.map(|v| v as u64),
            self.coord_cap.map(|v| v as u64),
            self.census_budget,
        ];
        Self::KEYS.iter().zip(vals).filter_map(|(k, v)| v.map(|v| (*k, v))).collect()
    }
}

/// A parsed and checked `.qvr` file.
#[derive(Clone, Debug)]
pub struct SourceSpec {
    pub raw: String,
    pub quiver: Quiver,
    pub field: Field,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDecl>,
    pub relations: Vec<RelationSpec>,
    pub options: Options,
}

impl PartialEq for SourceSpec {
    /// Structural equality; the raw text is ignored.
    fn eq(&self, other: &SourceSpec) -> bool {
        self.field == other.field
            && self.vertices == other.vertices
            && self.arrows == other.arrows
            && self.relations == other.relations
            && self.options == other.options
    }
}

impl SourceSpec {
    pub fn relations(&self) -> Result<Vec<Relation>> {
        self.relations
            .iter()
            .map(|r| {
                let terms = r
                    .terms
                    .iter()
                    .map(|t| {
                        let names: Vec<&str> = t.path.iter().map(String::as_str).collect();
                        Ok((t.coeff.clone(), self.quiver.path_from_names(&names)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Relation::new(terms))
            })
            .collect()
    }

    pub fn build(&self) -> Result<Algebra> {
        let rels = self.relations()?;
        let degree_cap = self.options.degree_cap.unwrap_or(DEFAULT_DEGREE_CAP);
        match self.options.path_cap {
            Some(cap) if cap != DEFAULT_PATH_CAP => {
                Algebra::build(std::sync::Arc::new(self.quiver.clone()), self.field, rels, degree_cap, cap)
            }
            _ => build_algebra(self.quiver.clone(), self.field, rels, degree_cap),
        }
    }
}

fn parse_field(c: &mut Cursor) -> std::result::Result<Field, Diagnostic> {
    let (w, p) = c.word("`Q` or `F p`")?;
    let digits = if w == "Q" {
        return Ok(Field::Rational);
    } else if w == "F" {
        c.word("a prime after `F`")?
    } else if let Some(rest) = w.strip_prefix('F') {
        (rest.to_string(), Pos { line: p.line, col: p.col + 1 })
    } else {
        return diag(p, format!("expected `Q` or `F p`, found `{w}`"));
    };
    let n: u64 = match digits.0.parse() {
        Ok(n) => n,
        Err(_) => return diag(digits.1, format!("`{}` is not a prime", digits.0)),
    };
    Field::prime(n).or_else(|e| diag(digits.1, e.to_string()))
}

fn name_ok(w: &str, p: Pos, what: &str) -> std::result::Result<(), Diagnostic> {
    if KEYWORDS.contains(&w) {
        return diag(p, format!("`{w}` is a keyword and cannot name a {what}"));
    }
    Ok(())
}

/// Integer or `n/d` coefficient, reduced into the field.
fn coefficient(field: Field, num: &str, den: Option<&str>, p: Pos) -> std::result::Result<Scalar, Diagnostic> {
    let n: BigInt = num.parse().or_else(|_| diag(p, format!("`{num}` is not an integer")))?;
    let d: BigInt = match den {
        Some(d) => d.parse().or_else(|_| diag(p, format!("`{d}` is not an integer")))?,
        None => BigInt::from(1),
    };
    field.from_ratio(&n, &d).or_else(|e| diag(p, e.to_string()))
}

fn is_integer(w: &str) -> bool {
    !w.is_empty() && w.chars().all(|c| c.is_ascii_digit())
}

struct Ctx<'a> {
    field: Field,
    quiver: &'a Quiver,
}

/// `term := [coeff "*"] path`; returns the term and the positions of its arrows.
fn parse_term(cx: &Ctx, c: &mut Cursor, sign: bool) -> std::result::Result<(TermSpec, Vec<Pos>, Pos), Diagnostic> {
    let start = c.pos();
    let mut coeff = cx.field.one();
    let (first, p) = c.word("a path or coefficient")?;
    let mut names = Vec::new();
    let mut poss = Vec::new();
    if is_integer(&first) {
        let den = if c.peek() == Some(&Tok::Slash) {
            c.next();
            let (d, dp) = c.word("a denominator")?;
            if !is_integer(&d) {
                return diag(dp, format!("`{d}` is not an integer"));
            }
            Some(d)
        } else {
            None
        };
        coeff = coefficient(cx.field, &first, den.as_deref(), p)?;
        c.expect(Tok::Star).map_err(|d| Diagnostic { message: format!("{} (a coefficient must be followed by `*` and a path)", d.message), ..d })?;
        let (w, wp) = c.word("an arrow name")?;
        names.push(w);
        poss.push(wp);
    } else {
        names.push(first);
        poss.push(p);
    }
    while c.peek() == Some(&Tok::Star) {
        c.next();
        let (w, wp) = c.word("an arrow name")?;
        names.push(w);
        poss.push(wp);
    }
    for (n, p) in names.iter().zip(&poss) {
        if cx.quiver.arrow_id(n).is_err() {
            return diag(*p, format!("unknown arrow `{n}`"));
        }
    }
    for i in 0..names.len().saturating_sub(1) {
        let left = cx.quiver.arrow(cx.quiver.arrow_id(&names[i]).unwrap());
        let right = cx.quiver.arrow(cx.quiver.arrow_id(&names[i + 1]).unwrap());
        if left.source != right.target {
            return diag(
                poss[i],
                format!(
                    "path does not compose: `{}` ends at {} but `{}` starts at {}",
                    names[i + 1],
                    cx.quiver.vertex_name(right.target),
                    names[i],
                    cx.quiver.vertex_name(left.source)
                ),
            );
        }
    }
    if !sign {
        coeff = -&coeff;
    }
    Ok((TermSpec { coeff, path: names }, poss, start))
}

fn parse_relation(cx: &Ctx, c: &mut Cursor) -> std::result::Result<RelationSpec, Diagnostic> {
    let mut terms: Vec<(TermSpec, Pos)> = Vec::new();
    let mut sign = true;
    if matches!(c.peek(), Some(Tok::Minus | Tok::Plus)) {
        sign = c.next().unwrap().0 == Tok::Plus;
    }
    loop {
        let (t, _, start) = parse_term(cx, c, sign)?;
        terms.push((t, start));
        // a line break continues the relation only before `+` or `-`
        let save = c.i;
        c.skip_newlines();
        match c.peek() {
            Some(Tok::Plus) => sign = true,
            Some(Tok::Minus) => sign = false,
            _ => {
                c.i = save;
                break;
            }
        }
        c.next();
        c.skip_newlines();
    }
    match c.peek() {
        None | Some(Tok::Semi | Tok::Newline) => {}
        Some(_) => return diag(c.pos(), format!("expected `+`, `-` or `;` in relation, found {}", c.found())),
    }
    let q = cx.quiver;
    let ends = |t: &TermSpec| {
        let first = q.arrow(q.arrow_id(t.path.last().unwrap()).unwrap()).source;
        let last = q.arrow(q.arrow_id(&t.path[0]).unwrap()).target;
        (first, last)
    };
    let (s0, t0) = ends(&terms[0].0);
    for (t, p) in &terms[1..] {
        let (s, e) = ends(t);
        if (s, e) != (s0, t0) {
            return diag(
                *p,
                format!(
                    "relation terms are not parallel: `{}` runs {} -> {} but `{}` runs {} -> {}",
                    terms[0].0.path.join("*"),
                    q.vertex_name(s0),
                    q.vertex_name(t0),
                    t.path.join("*"),
                    q.vertex_name(s),
                    q.vertex_name(e)
                ),
            );
        }
    }
    for (t, p) in &terms {
        if t.path.len() < 2 {
            return diag(*p, format!("relation term `{}` has length 1; relations must lie in the square of the arrow ideal", t.path.join("*")));
        }
    }
    Ok(RelationSpec { terms: terms.into_iter().map(|t| t.0).collect() })
}

fn parse_options(c: &mut Cursor, opts: &mut Options) -> std::result::Result<(), Diagnostic> {
    loop {
        c.skip_separators();
        if c.done() || c.at_keyword().is_some() {
            return Ok(());
        }
        let (k, kp) = c.word("an option name")?;
        c.expect(Tok::Eq)?;
        let (v, vp) = c.word("an integer value")?;
        let n: u64 = v.parse().or_else(|_| diag(vp, format!("`{v}` is not a nonnegative integer")))?;
        let as_usize = || usize::try_from(n).or_else(|_| diag(vp, "value too large"));
        match k.as_str() {
            "degree_cap" => opts.degree_cap = Some(as_usize()?),
            "path_cap" => opts.path_cap = Some(as_usize()?),
            "coord_cap" => opts.coord_cap = Some(as_usize()?),
            "census_budget" => opts.census_budget = Some(n),
            _ => return diag(kp, format!("unknown option `{k}` (known: {})", Options::KEYS.join(", "))),
        }
    }
}

/// Parse a `.qvr` file; every failure is a positioned diagnostic.
pub fn parse(text: &str) -> std::result::Result<SourceSpec, Diagnostic> {
    let mut c = Cursor::new(text)?;
    c.skip_separators();
    let p = c.pos();
    match c.at_keyword() {
        Some("field") => {
            c.next();
        }
        _ => return diag(p, format!("expected `field`, found {}", c.found())),
    }
    let field = parse_field(&mut c)?;

    c.skip_separators();
    let p = c.pos();
    if c.at_keyword() != Some("vertices") {
        return diag(p, format!("expected `vertices`, found {}", c.found()));
    }
    c.next();
    let mut vertices: Vec<String> = Vec::new();
    loop {
        c.skip_newlines();
        match c.peek() {
            Some(Tok::Word(_)) if c.at_keyword().is_none() => {
                let (w, p) = c.word("a vertex name")?;
                name_ok(&w, p, "vertex")?;
                if vertices.contains(&w) {
                    return diag(p, format!("duplicate vertex `{w}`"));
                }
                vertices.push(w);
            }
            Some(Tok::Semi) | None => break,
            Some(_) if c.at_keyword().is_some() => break,
            Some(t) => return diag(c.pos(), format!("expected a vertex name, found {}", t.describe())),
        }
    }
    if vertices.is_empty() {
        return diag(c.pos(), "a quiver needs at least one vertex");
    }

    let mut quiver = Quiver::new::<&str, &str, &str, &str>(&vertices.iter().map(String::as_str).collect::<Vec<_>>(), &[])
        .or_else(|e| diag(p, e.to_string()))?;
    let mut arrows: Vec<ArrowDecl> = Vec::new();
    c.skip_separators();
    if c.at_keyword() == Some("arrows") {
        c.next();
        loop {
            c.skip_newlines();
            match c.peek() {
                Some(Tok::Word(_)) if c.at_keyword().is_none() => {}
                Some(Tok::Semi) | None => break,
                Some(_) if c.at_keyword().is_some() => break,
                Some(t) => return diag(c.pos(), format!("expected an arrow declaration `name:source->target`, found {}", t.describe())),
            }
            let (name, np) = c.word("an arrow name")?;
            if is_integer(&name) {
                return diag(np, format!("arrow name `{name}` must not be a number"));
            }
            if vertices.contains(&name) {
                return diag(np, format!("arrow name `{name}` is already a vertex name"));
            }
            if arrows.iter().any(|a| a.name == name) {
                return diag(np, format!("duplicate arrow `{name}`"));
            }
            c.expect(Tok::Colon)?;
            let (s, sp) = c.word("a source vertex")?;
            c.expect(Tok::Arrow)?;
            let (t, tp) = c.word("a target vertex")?;
            for (v, vp) in [(&s, sp), (&t, tp)] {
                if !vertices.contains(v) {
                    return diag(vp, format!("unknown vertex `{v}`"));
                }
            }
            quiver.add_arrow(&name, &s, &t).or_else(|e| diag(np, e.to_string()))?;
            arrows.push(ArrowDecl { name, source: s, target: t });
        }
    }

    let mut relations = Vec::new();
    c.skip_separators();
    if c.at_keyword() == Some("relations") {
        c.next();
        let cx = Ctx { field, quiver: &quiver };
        loop {
            c.skip_separators();
            if c.done() || c.at_keyword().is_some() {
                break;
            }
            relations.push(parse_relation(&cx, &mut c)?);
        }
    }

    let mut options = Options::default();
    c.skip_separators();
    if c.at_keyword() == Some("options") {
        c.next();
        parse_options(&mut c, &mut options)?;
    }
    c.skip_separators();
    if !c.done() {
        let p = c.pos();
        return match c.at_keyword() {
            Some(k) => diag(p, format!("section `{k}` is out of order or repeated (order: field, vertices, arrows, relations, options)")),
            None => diag(p, format!("unexpected {}", c.found())),
        };
    }
    Ok(SourceSpec { raw: text.to_string(), quiver, field, vertices, arrows, relations, options })
}

/// Parse and build in one step, mapping diagnostics into [`Error::Parse`].
pub fn load(text: &str) -> Result<(SourceSpec, Algebra)> {
    let spec = parse(text)?;
    let alg = spec.build()?;
    Ok((spec, alg))
}

/// Scalar text accepted inside the format: as written in a relation.
fn emit_coeff(c: &Scalar) -> (bool, String) {
    match c {
        Scalar::Rat(_) => {
            let neg = c.is_negative();
            let a = if neg { -c } else { c.clone() };
            (neg, a.to_exact_string())
        }
        Scalar::Mod { value, .. } => (false, value.to_string()),
    }
}

/// Canonical text for a spec; `parse(&emit(s))` equals `s` structurally.
pub fn emit(spec: &SourceSpec) -> String {
    let mut out = format!("field {}\n", spec.field.label());
    out.push_str(&format!("vertices {}\n", spec.vertices.join(" ")));
    if !spec.arrows.is_empty() {
        let decls: Vec<String> = spec.arrows.iter().map(|a| format!("{}:{}->{}", a.name, a.source, a.target)).collect();
        out.push_str(&format!("arrows {}\n", decls.join(" ")));
    }
    if !spec.relations.is_empty() {
        out.push_str("relations\n");
        for r in &spec.relations {
            let mut line = String::new();
            for (i, t) in r.terms.iter().enumerate() {
                let (neg, mag) = emit_coeff(&t.coeff);
                match (i, neg) {
                    (0, true) => line.push('-'),
                    (0, false) => {}
                    (_, true) => line.push_str(" - "),
                    (_, false) => line.push_str(" + "),
                }
                if mag != "1" {
                    line.push_str(&mag);
                    line.push('*');
                }
                line.push_str(&t.path.join("*"));
            }
            out.push_str(&format!("  {line};\n"));
        }
    }
    let opts = spec.options.entries();
    if !opts.is_empty() {
        let kv: Vec<String> = opts.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!("options {}\n", kv.join(" ")));
    }
    out
}

fn one_line(text: &str) -> std::result::Result<Cursor, Diagnostic> {
    let c = Cursor::new(text)?;
    if let Some((_, p)) = c.toks.iter().find(|t| t.0 == Tok::Newline) {
        return diag(*p, "unexpected line break");
    }
    Ok(c)
}

fn path_at(q: &Quiver, c: &mut Cursor) -> std::result::Result<Path, Diagnostic> {
    let (w, p) = c.word("a path")?;
    if let Some(name) = w.strip_prefix("e_") {
        if q.arrow_id(&w).is_err() {
            let vp = Pos { line: p.line, col: p.col + 2 };
            let id = q.vertex(name).or_else(|_| diag(vp, format!("unknown vertex `{name}`")))?;
            return Ok(q.stationary(id));
        }
    }
    let mut names = vec![(w, p)];
    while c.peek() == Some(&Tok::Star) {
        c.next();
        names.push(c.word("an arrow name")?);
    }
    let mut ids = Vec::new();
    for (n, p) in &names {
        ids.push(q.arrow_id(n).or_else(|_| diag(*p, format!("unknown arrow `{n}`")))?);
    }
    for i in 0..ids.len().saturating_sub(1) {
        if q.arrow(ids[i]).source != q.arrow(ids[i + 1]).target {
            return diag(names[i].1, format!("path does not compose: `{}` ends at {} but `{}` starts at {}",
                names[i + 1].0, q.vertex_name(q.arrow(ids[i + 1]).target), names[i].0, q.vertex_name(q.arrow(ids[i]).source)));
        }
    }
    let refs: Vec<&str> = names.iter().map(|n| n.0.as_str()).collect();
    q.path_from_names(&refs).or_else(|e| diag(names[0].1, e.to_string()))
}

/// A path written right to left (`b*a`), or `e_v` for the stationary path at `v`.
pub fn parse_path(q: &Quiver, text: &str) -> std::result::Result<Path, Diagnostic> {
    let mut c = one_line(text)?;
    let p = path_at(q, &mut c)?;
    if !c.done() {
        return diag(c.pos(), format!("unexpected {} after path", c.found()));
    }
    Ok(p)
}

fn scalar_at(field: Field, c: &mut Cursor) -> std::result::Result<Scalar, Diagnostic> {
    let neg = if c.peek() == Some(&Tok::Minus) {
        c.next();
        true
    } else {
        false
    };
    let (n, p) = c.word("a number")?;
    if !is_integer(&n) {
        return diag(p, format!("`{n}` is not a number"));
    }
    let den = if c.peek() == Some(&Tok::Slash) {
        c.next();
        let (d, dp) = c.word("a denominator")?;
        if !is_integer(&d) {
            return diag(dp, format!("`{d}` is not an integer"));
        }
        Some(d)
    } else {
        None
    };
    if matches!(c.peek(), Some(Tok::Word(w)) if w == "mod") {
        let mp = c.pos();
        c.next();
        let (m, _) = c.word("a modulus")?;
        if field != Field::Prime(m.parse().unwrap_or(0)) {
            return diag(mp, format!("modulus {m} does not match the field {}", field.label()));
        }
    }
    let s = coefficient(field, &n, den.as_deref(), p)?;
    Ok(if neg { -&s } else { s })
}

/// `3`, `-3/7`, or `2 mod 5`.
pub fn parse_scalar(field: Field, text: &str) -> std::result::Result<Scalar, Diagnostic> {
    let mut c = one_line(text)?;
    let s = scalar_at(field, &mut c)?;
    if !c.done() {
        return diag(c.pos(), format!("unexpected {} after scalar", c.found()));
    }
    Ok(s)
}

/// `name=value` pairs separated by commas.
pub fn parse_assignments(field: Field, text: &str) -> std::result::Result<Vec<(String, Pos, Scalar)>, Diagnostic> {
    let mut c = one_line(text)?;
    let mut out = Vec::new();
    assignments_at(field, &mut c, &mut out)?;
    if !c.done() {
        return diag(c.pos(), format!("unexpected {}", c.found()));
    }
    Ok(out)
}

fn assignments_at(field: Field, c: &mut Cursor, out: &mut Vec<(String, Pos, Scalar)>) -> std::result::Result<(), Diagnostic> {
    loop {
        let (k, kp) = c.word("a name")?;
        c.expect(Tok::Eq)?;
        let v = scalar_at(field, c)?;
        out.push((k, kp, v));
        if c.peek() != Some(&Tok::Comma) {
            return Ok(());
        }
        c.next();
    }
}

/// A module named on the command line.
#[derive(Clone, Debug, PartialEq)]
pub enum ModuleSpec {
    Simple(usize),
    Projective(usize),
    Injective(usize),
    /// The uniserial with this mast; `fdelta` sets `f_δ(1)` for arrows of `D`.
    Mast { path: Path, fdelta: Vec<(usize, Scalar)> },
}

/// `simple:V`, `projective:V`, `injective:V`, or `mast:PATH[@d=c,...]`.
pub fn parse_module_spec(q: &Quiver, field: Field, text: &str) -> std::result::Result<ModuleSpec, Diagnostic> {
    let mut c = one_line(text)?;
    let (kind, kp) = c.word("`simple`, `projective`, `injective` or `mast`")?;
    c.expect(Tok::Colon)?;
    let spec = match kind.as_str() {
        "simple" | "projective" | "injective" => {
            let (v, vp) = c.word("a vertex")?;
            let id = q.vertex(&v).or_else(|_| diag(vp, format!("unknown vertex `{v}`")))?;
            match kind.as_str() {
                "simple" => ModuleSpec::Simple(id),
                "projective" => ModuleSpec::Projective(id),
                _ => ModuleSpec::Injective(id),
            }
        }
        "mast" => {
            let path = path_at(q, &mut c)?;
            let mut fdelta = Vec::new();
            if c.peek() == Some(&Tok::At) {
                c.next();
                let mut raw = Vec::new();
                assignments_at(field, &mut c, &mut raw)?;
                for (k, kp, v) in raw {
                    let a = q.arrow_id(&k).or_else(|_| diag(kp, format!("unknown arrow `{k}`")))?;
                    fdelta.push((a, v));
                }
            }
            ModuleSpec::Mast { path, fdelta }
        }
        _ => return diag(kp, format!("unknown module kind `{kind}` (expected simple, projective, injective or mast)")),
    };
    if !c.done() {
        return diag(c.pos(), format!("unexpected {}", c.found()));
    }
    Ok(spec)
}

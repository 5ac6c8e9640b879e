use proptest::prelude::*;

use super::*;
use crate::field::Field;

const EXAMPLE_D: &str = "field Q; vertices 1 2 3 4; arrows a1:1->2 a2:2->3 d1:2->3 b1:3->4; relations d1*a1 - a2*a1;";

fn err(text: &str) -> Diagnostic {
    parse(text).expect_err("should be rejected")
}

#[test]
fn example_d_inline() {
    let (spec, alg) = load(EXAMPLE_D).unwrap();
    assert_eq!(spec.vertices, ["1", "2", "3", "4"]);
    assert_eq!(spec.relations.len(), 1);
    assert_eq!(spec.relations[0].terms[1].coeff, Field::Rational.from_i64(-1));
    assert_eq!(spec.relations[0].terms[0].path, ["d1", "a1"]);
    assert_eq!(alg.dim(), 12);
}

#[test]
fn hereditary_without_relations() {
    let (_, alg) = load("field F3\nvertices 1 2 3\narrows a:1->2 b:2->3\nrelations\n").unwrap();
    assert!(alg.relations().is_empty());
    assert_eq!(alg.dim(), 6);
    assert_eq!(alg.field(), Field::Prime(3));
    let (_, alg) = load("field F 2; vertices 1; arrows").unwrap();
    assert_eq!(alg.dim(), 1);
}

#[test]
fn non_parallel_relation_prints_endpoints() {
    let d = err("field Q\nvertices 1 2 3\narrows a1:1->2 b1:2->3 g1:1->2\nrelations b1*a1 - g1;");
    assert_eq!(d.pos, Pos { line: 4, col: 19 });
    assert!(d.message.contains("not parallel"), "{d}");
    assert!(d.message.contains("1 -> 3") && d.message.contains("1 -> 2"), "{d}");
}

#[test]
fn positioned_diagnostics() {
    let d = err("field Q\nvertices 1 2\narrows a:1->3");
    assert_eq!((d.pos, d.message.as_str()), (Pos { line: 3, col: 13 }, "unknown vertex `3`"));
    let d = err("field Q\nvertices 1 2 3\narrows a:1->2 b:2->3\nrelations a*b;");
    assert_eq!(d.pos, Pos { line: 4, col: 11 });
    assert!(d.message.contains("does not compose"), "{d}");
    let d = err("field Q; vertices 1 2; arrows a:1->2; relations c*a;");
    assert_eq!(d.pos.col, 49);
    assert!(d.message.contains("unknown arrow `c`"));
    let d = err("field F4; vertices 1");
    assert_eq!(d.pos, Pos { line: 1, col: 8 });
    assert!(err("vertices 1").message.contains("expected `field`"));
    assert!(err("field Q; vertices 1; arrows a:1->1 a:1->1").message.contains("duplicate arrow"));
    assert!(err("field Q; vertices 1 1").message.contains("duplicate vertex"));
    assert!(err("field Q; vertices 1 2; arrows a:1->2 b:2->1; relations a*b - 2;").message.contains("followed by `*`"));
    assert!(err("field Q; vertices 1; options degree_cap=x").message.contains("not a nonnegative integer"));
    assert!(err("field Q; vertices 1; options widgets=3").message.contains("unknown option"));
    assert!(err("field Q; vertices 1; relations; arrows").message.contains("out of order"));
    assert!(err("field Q; vertices 1 $").message.contains("unexpected character"));
    let d = err("field Q\nvertices 1 2\narrows a:1->2 b:2->1\nrelations b*a - 1/0*b*a;");
    assert!(d.message.contains("zero denominator"), "{d}");
}

#[test]
fn coefficients_comments_and_continuations() {
    let text = "# header\nfield Q   # rationals\nvertices 1 2 3\narrows a:1->2 b:2->3 c:2->3\nrelations\n  3/7*b*a\n  - 2*c*a\n  + c*a;\n";
    let (spec, alg) = load(text).unwrap();
    let t = &spec.relations[0].terms;
    assert_eq!(t.len(), 3);
    assert_eq!(t[0].coeff, parse_scalar(Field::Rational, "3/7").unwrap());
    assert_eq!(t[1].coeff, Field::Rational.from_i64(-2));
    // b*a = (7/3) c*a leaves one path of length 2
    assert_eq!(alg.dim(), 3 + 3 + 1);
}

#[test]
fn newline_ends_a_relation() {
    let (spec, _) = load("field F2\nvertices 1 2 3\narrows a:1->2 b:2->3 c:2->3\nrelations\n b*a\n c*a\n").unwrap();
    assert_eq!(spec.relations.len(), 2);
    assert!(spec.relations.iter().all(|r| r.terms.len() == 1));
}

#[test]
fn emit_round_trips_examples() {
    for text in [
        include_str!("../../examples/example-a.qvr"),
        include_str!("../../examples/example-b.qvr"),
        include_str!("../../examples/example-c.qvr"),
        include_str!("../../examples/example-d.qvr"),
        include_str!("../../examples/a2.qvr"),
        "field F5; vertices x y; arrows p:x->y q:x->y r:y->y; relations 3*r*p - r*q + 4*r*p; r*r; options degree_cap=8 coord_cap=4",
        "field Q; vertices 1 2 3; arrows a:1->2 b:2->3 c:2->3; relations -1/2*b*a + c*a;",
    ] {
        let s = parse(text).unwrap();
        let back = parse(&emit(&s)).unwrap();
        assert_eq!(s, back, "{}", emit(&s));
        assert_eq!(emit(&back), emit(&s));
    }
}

#[test]
fn paths_scalars_and_module_specs() {
    let (spec, alg) = load(EXAMPLE_D).unwrap();
    let q = alg.quiver();
    let p = parse_path(q, "a2*a1").unwrap();
    assert_eq!(q.path_name(&p), "a2*a1");
    assert_eq!(p.source(), 0);
    assert!(parse_path(q, "e_3").unwrap().is_stationary());
    assert_eq!(parse_path(q, "a1*a2").unwrap_err().pos.col, 1);
    assert_eq!(parse_path(q, "a2*zz").unwrap_err().pos.col, 4);
    assert!(parse_path(q, "a2 a1").is_err());
    let f5 = Field::Prime(5);
    assert_eq!(parse_scalar(f5, "2 mod 5").unwrap(), f5.from_i64(2));
    assert_eq!(parse_scalar(f5, "-1").unwrap(), f5.from_i64(4));
    assert_eq!(parse_scalar(f5, "1/2").unwrap(), f5.from_i64(3));
    assert!(parse_scalar(f5, "1/5").is_err());
    assert!(parse_scalar(f5, "2 mod 7").is_err());
    assert!(parse_scalar(Field::Rational, "abc").is_err());
    assert_eq!(parse_module_spec(q, spec.field, "simple:2").unwrap(), ModuleSpec::Simple(1));
    assert_eq!(parse_module_spec(q, spec.field, "injective:4").unwrap(), ModuleSpec::Injective(3));
    match parse_module_spec(q, spec.field, "mast:a2*a1@d1=1").unwrap() {
        ModuleSpec::Mast { path, fdelta } => {
            assert_eq!(path, p);
            assert_eq!(fdelta, vec![(q.arrow_id("d1").unwrap(), Field::Rational.one())]);
        }
        other => panic!("{other:?}"),
    }
    assert!(parse_module_spec(q, spec.field, "simple:9").unwrap_err().message.contains("unknown vertex"));
    assert!(parse_module_spec(q, spec.field, "blob:1").is_err());
}

fn cli(args: &[&str]) -> cli::Outcome {
    let mut v = vec!["userial"];
    v.extend_from_slice(args);
    cli::run(v)
}

fn example(name: &str) -> String {
    format!("{}/examples/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn cli_exit_codes() {
    let d = example("example-d.qvr");
    let a2 = example("a2.qvr");
    let o = cli(&["ar", &a2, "--module", "simple:1"]);
    assert_eq!(o.code, 0, "{o:?}");
    assert!(o.stdout.contains("alpha=1"));
    let o = cli(&["check", &d, "--mast", "a2*a1", "--fdelta", "d1=1", "--expect", "reducible"]);
    assert_eq!(o.code, 0, "{o:?}");
    let o = cli(&["check", &d, "--mast", "a2*a1", "--expect", "holds"]);
    assert_eq!(o.code, 1, "{o:?}");
    assert_eq!(cli(&["check", &d]).code, 2);
    assert_eq!(cli(&["check", &d, "--mast", "a1*a2"]).code, 2);
    assert_eq!(cli(&["validate", "/nonexistent.qvr"]).code, 2);
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["--help"]).code, 0);
}

#[test]
fn cli_json_is_deterministic() {
    let a = example("example-a.qvr");
    let one = cli(&["check", &a, "--mast", "a1", "--json"]);
    let two = cli(&["check", &a, "--mast", "a1", "--json"]);
    assert_eq!(one.code, 0);
    assert_eq!(one.stdout, two.stdout);
    let v: serde_json::Value = serde_json::from_str(&one.stdout).unwrap();
    assert_eq!(v["path_order"], PATH_ORDER);
    assert_eq!(v["result"]["report"]["verdict"], "fails");
    assert_eq!(v["result"]["report"]["theorem"], "multiserial-dim≤1");
    assert_eq!(v["result"]["witness_verified"], true);
    assert!(v["result"]["report"]["failing"].as_array().unwrap().iter().all(|c| c.as_str().unwrap().starts_with("2b-i:")));
    let keys: Vec<&String> = v["result"]["report"].as_object().unwrap().keys().collect();
    assert!(keys.contains(&&"witness".to_string()));
}

#[test]
fn cli_subcommands_run() {
    let d = example("example-d.qvr");
    for args in [
        vec!["validate", d.as_str()],
        vec!["algebra", d.as_str(), "--json"],
        vec!["masts", d.as_str(), "--maxlen", "2"],
        vec!["uniserials", d.as_str(), "--mast", "b1*a2*a1"],
        vec!["witness", d.as_str(), "--mast", "a2*a1"],
        vec!["ar", d.as_str(), "--module", "mast:a2*a1@d1=1", "--json"],
    ] {
        let o = cli(&args);
        assert_eq!(o.code, 0, "{args:?}: {o:?}");
        assert!(!o.stdout.is_empty());
    }
    let k = example("kronecker-f2.qvr");
    let o = cli(&["census", &k, "--dim-cap", "2", "--json"]);
    assert_eq!(o.code, 0, "{o:?}");
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["result"]["modules"].as_array().unwrap().len(), 5);
    assert_eq!(v["result"]["modules"][4]["id"], 4);
    let o = cli(&["uniserials", &k, "--mast", "x", "--enumerate", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["result"]["classes"].as_array().unwrap().len(), 2);
}

fn arb_spec() -> impl Strategy<Value = String> {
    (1usize..4, prop::collection::vec((0usize..4, 0usize..4), 0..5), prop::bool::ANY).prop_flat_map(|(nv, arrows, q)| {
        let arrows: Vec<(usize, usize)> = arrows.into_iter().map(|(s, t)| (s % nv, t % nv)).collect();
        let n = arrows.len();
        let rels = prop::collection::vec(prop::collection::vec((-3i64..4, prop::collection::vec(0..n.max(1), 2..4)), 1..3), 0..3);
        (Just(nv), Just(arrows), Just(q), rels)
    })
    .prop_map(|(nv, arrows, q, rels)| {
        let mut s = format!("field {}\nvertices", if q { "Q" } else { "F3" });
        for v in 0..nv {
            s.push_str(&format!(" v{v}"));
        }
        s.push_str("\narrows");
        for (i, (a, b)) in arrows.iter().enumerate() {
            s.push_str(&format!(" x{i}:v{a}->v{b}"));
        }
        s.push_str("\nrelations\n");
        for r in rels {
            let terms: Vec<String> = r
                .iter()
                .map(|(c, p)| format!("{c}*{}", p.iter().map(|i| format!("x{i}")).collect::<Vec<_>>().join("*")))
                .collect();
            s.push_str(&terms.join(" + ").replace("+ -", "- "));
            s.push_str(";\n");
        }
        s
    })
}

proptest! {
    #[test]
    fn parser_is_total(text in "\\PC{0,80}") {
        let _ = parse(&text);
    }

    #[test]
    fn parser_is_total_on_near_misses(text in "(field|vertices|arrows|relations|options|Q|F2|1|2|a|b|:|->|\\*|\\+|-|;|=|/|\n| ){0,40}") {
        if let Err(d) = parse(&text) {
            prop_assert!(d.pos.line >= 1 && d.pos.col >= 1);
        }
    }

    #[test]
    fn emit_is_a_fixed_point(text in arb_spec()) {
        if let Ok(s) = parse(&text) {
            let e = emit(&s);
            let back = parse(&e).unwrap();
            prop_assert_eq!(&back, &s);
            prop_assert_eq!(emit(&back), e);
        }
    }
}

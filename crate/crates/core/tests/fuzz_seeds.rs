//! Replays the checked-in fuzz corpus through the fuzz target bodies.

use std::path::PathBuf;

use userial::frontend::{emit, parse, parse_module_spec, parse_path, parse_scalar};
use userial::Field;

fn seeds(target: &str) -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .map(|p| {
            let bytes = std::fs::read(&p).unwrap();
            (p, String::from_utf8_lossy(&bytes).into_owned())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn parse_qvr_seeds() {
    let mut ok = 0;
    for (p, text) in seeds("parse_qvr") {
        if let Ok(spec) = parse(&text) {
            let again = parse(&emit(&spec)).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
            assert_eq!(again, spec, "{}", p.display());
            let _ = spec.build();
            ok += 1;
        }
    }
    assert!(ok >= 6);
}

#[test]
fn parse_path_seeds() {
    let spec = parse("field Q; vertices 1 2 3 4; arrows a1:1->2 a2:2->3 d1:2->3 b1:3->4 e_1:4->4").unwrap();
    for (_, text) in seeds("parse_path") {
        if let Ok(p) = parse_path(&spec.quiver, &text) {
            if !p.is_stationary() {
                assert_eq!(parse_path(&spec.quiver, &spec.quiver.path_name(&p)).unwrap(), p);
            }
        }
    }
}

#[test]
fn parse_scalar_seeds() {
    for (_, text) in seeds("parse_scalar") {
        for f in [Field::Rational, Field::Prime(2), Field::Prime(7)] {
            if let Ok(s) = parse_scalar(f, &text) {
                assert_eq!(parse_scalar(f, &s.to_exact_string()).unwrap(), s);
            }
        }
    }
}

#[test]
fn parse_module_spec_seeds() {
    let spec = parse("field F3; vertices 1 2 3 4; arrows a1:1->2 a2:2->3 d1:2->3 b1:3->4").unwrap();
    for (_, text) in seeds("parse_module_spec") {
        let _ = parse_module_spec(&spec.quiver, spec.field, &text);
    }
}

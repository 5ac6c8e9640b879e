//! Small algebras shared by unit tests.

use crate::algebra::{build_algebra, Algebra, Relation, DEFAULT_DEGREE_CAP};
use crate::field::Field;
use crate::quiver::Quiver;

/// Relations given as `(coefficient, right-to-left arrow names)` terms.
pub fn algebra(
    field: Field,
    vertices: &[&str],
    arrows: &[(&str, &str, &str)],
    relations: &[&[(i64, &[&str])]],
) -> Algebra {
    let q = Quiver::new(vertices, arrows).unwrap();
    let rels = relations
        .iter()
        .map(|terms| {
            Relation::new(
                terms
                    .iter()
                    .map(|(c, names)| (field.from_i64(*c), q.path_from_names(names).unwrap()))
                    .collect(),
            )
        })
        .collect();
    build_algebra(q, field, rels, DEFAULT_DEGREE_CAP).unwrap()
}

pub fn linear(field: Field, n: usize) -> Algebra {
    let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let names: Vec<(String, String, String)> = (1..n)
        .map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string()))
        .collect();
    let q = Quiver::new(&vs, &names).unwrap();
    build_algebra(q, field, vec![], DEFAULT_DEGREE_CAP).unwrap()
}

pub fn example_a(field: Field) -> Algebra {
    algebra(
        field,
        &["1", "2", "3", "4", "5"],
        &[("a1", "1", "2"), ("g1", "3", "2"), ("g2", "4", "2"), ("b1", "2", "5"), ("b2", "2", "5")],
        &[&[(1, &["b1", "a1"]), (-1, &["b2", "a1"])], &[(1, &["b1", "g1"])], &[(1, &["b2", "g2"])]],
    )
}

pub fn example_b(field: Field) -> Algebra {
    algebra(
        field,
        &["1", "2", "3", "4", "5", "6"],
        &[
            ("a1", "1", "2"),
            ("g1", "3", "2"),
            ("g2", "4", "2"),
            ("b1", "2", "6"),
            ("b2", "2", "5"),
            ("eps", "5", "6"),
        ],
        &[
            &[(1, &["eps", "b2", "g2"]), (-1, &["b1", "g2"])],
            &[(1, &["b1", "g1"])],
            &[(1, &["b2", "a1"])],
        ],
    )
}

pub fn example_c(field: Field) -> Algebra {
    algebra(
        field,
        &["1", "2", "3", "4", "5"],
        &[("a1", "1", "2"), ("g1", "4", "2"), ("a2", "2", "3"), ("b2", "2", "5"), ("b1", "3", "5")],
        &[&[(1, &["b2", "a1"]), (-1, &["b1", "a2", "a1"])], &[(1, &["b2", "g1"])]],
    )
}

pub fn example_d(field: Field) -> Algebra {
    algebra(
        field,
        &["1", "2", "3", "4"],
        &[("a1", "1", "2"), ("a2", "2", "3"), ("d1", "2", "3"), ("b1", "3", "4")],
        &[&[(1, &["d1", "a1"]), (-1, &["a2", "a1"])]],
    )
}

/// Two vertices joined by two parallel arrows with `J² = 0` automatically.
pub fn kronecker(field: Field) -> Algebra {
    algebra(field, &["1", "2"], &[("x", "1", "2"), ("y", "1", "2")], &[])
}

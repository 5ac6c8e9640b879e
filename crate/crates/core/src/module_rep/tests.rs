use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::fixtures;

fn f2() -> Field {
    Field::prime(2).unwrap()
}

#[test]
fn validation() {
    let a = fixtures::example_d(Field::Rational);
    assert!(Rep::zero(a.quiver_arc(), a.field()).is_valid(&a));
    let p = projective(&a, 0);
    assert!(p.is_valid(&a));
    assert_eq!(p.dims(), &[1, 1, 1, 1]);
    let mut maps = p.maps().to_vec();
    let d1 = a.quiver().arrow_id("d1").unwrap();
    maps[d1] = maps[d1].scale(&Field::Rational.from_i64(2));
    let bad = Rep::new(a.quiver_arc(), a.field(), p.dims().to_vec(), maps).unwrap();
    assert_eq!(bad.validate(&a), Err(Error::RelationViolated("d1*a1 - a2*a1".into())));
}

#[test]
fn radical_socle_top() {
    let a = fixtures::linear(Field::Rational, 2);
    let s = simple(&a, 0);
    assert_eq!(s.radical().dim(), 0);
    assert_eq!(s.socle().dim(), 1);
    let p = projective(&a, 0);
    assert_eq!(p.socle().dims(), vec![0, 1]);
    assert_eq!(p.top().dims(), &[1, 0]);
    assert!(p.is_uniserial());
    assert_eq!(p.radical_series().len(), 3);
    let (q, _) = p.quotient(&p.socle());
    assert!(is_isomorphic_indec(&q, &s));
}

#[test]
fn uniserial_checks() {
    let a = fixtures::linear(Field::Rational, 2);
    let s = simple(&a, 0);
    assert!(s.is_uniserial());
    let ss = direct_sum(&[&s, &s]).rep;
    assert!(!ss.is_uniserial());
    let ea = fixtures::example_a(Field::Rational);
    let p1 = projective(&ea, 0);
    assert_eq!(p1.dims(), &[1, 1, 0, 0, 1]);
    assert!(p1.is_uniserial());
}

#[test]
fn hom_spaces() {
    let a = fixtures::linear(Field::Rational, 3);
    assert_eq!(hom_space(&simple(&a, 0), &simple(&a, 0)).len(), 1);
    assert_eq!(hom_space(&simple(&a, 0), &simple(&a, 1)).len(), 0);
    // Yoneda: dim Hom(Λe_v, M) = dim e_v M on random reps of A3 over F_3.
    let f = Field::prime(3).unwrap();
    let a3 = fixtures::linear(f, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..3 {
        let dims: Vec<usize> = (0..3).map(|_| rng.gen_range(0..3)).collect();
        let maps = a3
            .quiver()
            .arrows()
            .iter()
            .map(|ar| {
                let (r, c) = (dims[ar.target], dims[ar.source]);
                Matrix::from_rows(f, r, c, (0..r * c).map(|_| f.from_i64(rng.gen_range(0..3))).collect())
            })
            .collect();
        let m = Rep::new(a3.quiver_arc(), f, dims.clone(), maps).unwrap();
        for v in 0..3 {
            assert_eq!(hom_space(&projective(&a3, v), &m).len(), dims[v]);
        }
    }
}

#[test]
fn split_tests() {
    let a = fixtures::linear(Field::Rational, 2);
    let p = projective(&a, 0);
    let s2 = simple(&a, 1);
    let inc = hom_space(&s2, &p);
    assert_eq!(inc.len(), 1);
    assert!(is_split_mono(&inc[0], &s2, &p).is_none());
    let id = ModuleMap::identity(&p);
    assert!(is_split_mono(&id, &p, &p).is_some());
    assert!(is_split_epi(&id, &p, &p).is_some());
    assert!(is_split_mono(&ModuleMap::zero(&p, &p), &p, &p).is_none());
}

#[test]
fn constructions() {
    let a = fixtures::linear(Field::Rational, 2);
    let p = projective(&a, 0);
    let z = Rep::zero(a.quiver_arc(), a.field());
    assert!(is_isomorphic(&direct_sum(&[&p, &z]).rep, &p));
    let id = ModuleMap::identity(&p);
    let (pb, _, _) = pullback(&id, &id, &p, &p);
    assert!(is_isomorphic(&pb, &p));
    let (po, _, _) = pushout(&id, &id, &p, &p, &p);
    assert!(is_isomorphic(&po, &p));
    let (k, _) = kernel(&id, &p);
    assert!(k.is_zero());
    let (c, _) = cokernel(&id, &p);
    assert!(c.is_zero());
}

#[test]
fn decomposition() {
    let a = fixtures::linear(Field::Rational, 2);
    let s1 = simple(&a, 0);
    let ss = direct_sum(&[&s1, &s1]).rep;
    let parts: Vec<Rep> = decompose(&ss).into_iter().map(|s| s.rep).collect();
    let classes = group_isoclasses(&parts);
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0].1, 2);
    assert!(is_indecomposable(&projective(&a, 0)));

    // A random basis change of S1 ⊕ P1 ⊕ S2 over F2 decomposes into the same classes.
    let f = f2();
    let a = fixtures::linear(f, 2);
    let m = direct_sum(&[&simple(&a, 0), &projective(&a, 0), &simple(&a, 1)]).rep;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let change: Vec<Matrix> = m
        .dims()
        .iter()
        .map(|&d| loop {
            let c = Matrix::from_rows(f, d, d, (0..d * d).map(|_| f.from_i64(rng.gen_range(0..2))).collect());
            if c.inverse().is_some() {
                break c;
            }
        })
        .collect();
    let m2 = m.transport(&change);
    let dims = |m: &Rep| {
        let mut v: Vec<Vec<usize>> = decompose(m).into_iter().map(|s| s.rep.dims().to_vec()).collect();
        v.sort();
        v
    };
    assert_eq!(dims(&m), dims(&m2));
    for s in decompose(&m2) {
        assert!(s.projection.compose(&s.inclusion).is_identity());
        assert!(s.inclusion.is_homomorphism(&s.rep, &m2));
    }
}

#[test]
fn injectives_are_duals_of_opposite_projectives() {
    let a = fixtures::example_d(Field::Rational);
    let op = a.opposite().unwrap();
    for v in 0..a.quiver().num_vertices() {
        let inj = injective(&a, v);
        assert!(inj.is_valid(&a));
        assert_eq!(inj.socle().dims().iter().sum::<usize>(), 1);
        assert_eq!(inj.socle().dims()[v], 1);
        let dual = projective(&op, v).dual(a.quiver_arc());
        assert!(is_isomorphic(&dual, &inj));
    }
}

#[test]
fn multiserial_degree() {
    use crate::algebra::is_left_multiserial;
    assert_eq!(is_left_multiserial(&fixtures::linear(Field::Rational, 4)), Some(1));
    assert_eq!(is_left_multiserial(&fixtures::example_a(Field::Rational)), Some(2));
    assert_eq!(is_left_multiserial(&fixtures::kronecker(f2())), Some(2));
}

use super::*;
use crate::error::Error;
use crate::poly::Field;

fn kxy() -> RingPresentation {
    RingPresentation::regular(Field::Rational, &["x", "y"])
}

fn family_02() -> RingPresentation {
    RingPresentation::parse(
        Field::Rational,
        &["y", "v1", "v2", "z1", "z2"],
        &["y^2", "y*v1", "y*v2", "v1*v2", "v1^3 - z1*y", "v2^3 - z2*y"],
    )
    .unwrap()
}

fn id(r: &RingPresentation, g: &[&str]) -> IdealHandle {
    r.ideal_from_strs(g).unwrap()
}

fn eq(a: &IdealHandle, b: &IdealHandle) -> bool {
    ideal_equal(a, b).unwrap()
}

#[test]
fn combine_examples() {
    let r = kxy();
    let m = r.maximal_ideal();
    assert!(eq(&m.power(2).unwrap(), &id(&r, &["x^2", "x*y", "y^2"])));
    let p = id(&r, &["x^2", "y^2"]).product(&id(&r, &["x^2", "x*y", "y^2"])).unwrap();
    assert!(eq(&p, &m.power(4).unwrap()));
    assert!(m.power(0).unwrap().is_unit().unwrap());
    assert!(matches!(
        ideal_combine(Combine::Power(-1), &m),
        Err(Error::NegativeExponent(-1))
    ));
    assert!(eq(&m.sum(&id(&r, &["x"])).unwrap(), &m));
}

#[test]
fn intersect_examples() {
    let r = kxy();
    assert!(eq(&ideal_intersect(&id(&r, &["x"]), &id(&r, &["y"])).unwrap(), &id(&r, &["x*y"])));
    let a = id(&r, &["x^2", "y"]);
    let b = id(&r, &["x"]);
    let want = id(&r, &["x^2", "x*y"]);
    assert!(eq(&ideal_intersect(&a, &b).unwrap(), &want));
    assert!(eq(&ideal_intersect_elim(&a, &b).unwrap(), &want));
    let j = id(&r, &["x^3", "x*y", "y^2"]);
    assert!(eq(&ideal_intersect(&j, &j).unwrap(), &j));
}

#[test]
fn colon_examples() {
    let r = kxy();
    let m = r.maximal_ideal();
    assert!(eq(&ideal_colon(&id(&r, &["x^2", "x*y"]), &id(&r, &["x"])).unwrap(), &m));
    assert!(eq(&ideal_colon(&id(&r, &["x"]), &id(&r, &["1"])).unwrap(), &id(&r, &["x"])));
    let want = id(&r, &["x^2", "y^2", "x*y"]);
    let q = id(&r, &["x^2", "y^2"]);
    assert!(eq(&ideal_colon(&q, &m).unwrap(), &want));
    assert!(eq(&ideal_colon_elim(&q, &m).unwrap(), &want));
    assert!(matches!(ideal_colon(&q, &id(&r, &["0"])), Err(Error::ZeroDivisorIdeal)));
}

#[test]
fn routes_agree_in_family_ring() {
    let r = family_02();
    let m = r.maximal_ideal();
    let q = id(&r, &["z1", "z2"]);
    let m2 = m.power(2).unwrap();
    let m3 = m.power(3).unwrap();
    assert!(eq(&ideal_colon(&m3, &m2).unwrap(), &ideal_colon_elim(&m3, &m2).unwrap()));
    let qm = q.product(&m).unwrap();
    assert!(eq(&ideal_intersect(&q, &m2).unwrap(), &ideal_intersect_elim(&q, &m2).unwrap()));
    assert!(eq(&ideal_intersect(&q, &m2).unwrap(), &qm));
}

#[test]
fn equality_examples() {
    let r = kxy();
    let a = id(&r, &["x^2", "y^2"]);
    let b = r.maximal_ideal().power(2).unwrap();
    assert!(!eq(&a, &b));
    assert!(ideal_contains(&b, &a).unwrap());
    assert!(!ideal_contains(&a, &b).unwrap());
    let f = family_02();
    let m = f.maximal_ideal();
    let q = id(&f, &["z1", "z2"]);
    assert!(eq(&m.power(4).unwrap(), &q.product(&m.power(3).unwrap()).unwrap()));
    assert!(!eq(&m.power(3).unwrap(), &q.product(&m.power(2).unwrap()).unwrap()));
}

#[test]
fn length_examples() {
    let r = kxy();
    assert_eq!(artinian_length(&r.maximal_ideal().power(2).unwrap()).unwrap().value, 3);
    let f = family_02();
    let m = f.maximal_ideal();
    let q = id(&f, &["z1", "z2"]);
    assert_eq!(artinian_length(&m.power(2).unwrap()).unwrap().value, 6);
    assert_eq!(artinian_length(&q).unwrap().value, 6);
    let qm = q.product(&m).unwrap();
    assert_eq!(quotient_length(&m.power(2).unwrap(), &qm).unwrap().value, 2);
    let qm2 = q.product(&m.power(2).unwrap()).unwrap();
    assert_eq!(quotient_length(&m.power(3).unwrap(), &qm2).unwrap().value, 2);
    assert_eq!(quotient_length(&r.maximal_ideal(), &r.maximal_ideal()).unwrap().value, 0);
    match quotient_length(&id(&r, &["x^2", "y^2"]), &r.maximal_ideal()) {
        Err(Error::NotContained { witness }) => assert!(witness == "x" || witness == "y"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn length_certificate() {
    let r = kxy();
    let l = artinian_length(&id(&r, &["x^2", "y^3"])).unwrap();
    assert_eq!(l.value, 6);
    assert_eq!((l.truncation, l.witness), (4, 5));
    assert!(matches!(
        artinian_length(&id(&r, &["x^2"])),
        Err(Error::NotZeroDimensional { ref variable, .. }) if variable == "y"
    ));
}

#[test]
fn local_length_ignores_distant_components() {
    // x^2 - x = x(x - 1) is locally the ideal (x)
    let r = kxy();
    let l = artinian_length(&id(&r, &["x^2 - x", "y^2"])).unwrap();
    assert_eq!(l.value, 2);
}

#[test]
fn oracle_examples() {
    assert_eq!(monomial_length_oracle(2, &[vec![2, 0], vec![0, 2]], 4).unwrap().value, 4);
    assert_eq!(monomial_length_oracle(2, &[vec![2, 0], vec![1, 1], vec![0, 2]], 4).unwrap().value, 3);
    assert_eq!(monomial_length_oracle(2, &[vec![3, 0], vec![1, 2], vec![0, 4]], 5).unwrap().value, 8);
    assert!(monomial_length_oracle(2, &[vec![3, 0]], 5).is_err());
    let r = kxy();
    assert!(monomial_exponents(&[r.parse_poly("x + y").unwrap()], r.names()).is_err());
}

#[test]
fn intersection_identities_on_test_rings() {
    // (a1) ∩ Q^(n+1) I^2 = (a1) Q^n I^2 and Q^(n+1) ∩ Q^n I^2 = Q^(n+1) I
    let f = family_02();
    let i = f.maximal_ideal();
    let q = id(&f, &["z1", "z2"]);
    let a1 = id(&f, &["z1"]);
    let i2 = i.power(2).unwrap();
    for n in 0..2 {
        let qn = q.power(n).unwrap();
        let lhs = ideal_intersect(&a1, &q.power(n + 1).unwrap().product(&i2).unwrap()).unwrap();
        let rhs = a1.product(&qn).unwrap().product(&i2).unwrap();
        assert!(eq(&lhs, &rhs), "n = {n}");
    }
    for n in 0..3 {
        let qn = q.power(n).unwrap();
        let lhs = ideal_intersect(&q.power(n + 1).unwrap(), &qn.product(&i2).unwrap()).unwrap();
        let rhs = q.power(n + 1).unwrap().product(&i).unwrap();
        assert!(eq(&lhs, &rhs), "n = {n}");
    }
}


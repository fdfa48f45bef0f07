use fd_core::models::omega2::{u, BvSource, LoopModelConfig};
use fd_core::models::{by_id, omega2_sphere_model};
use fd_core::{ops, Error, Expr, Polynomial};

fn s3() -> fd_core::AlgebraModel {
    by_id("omega2s3", 16).unwrap()
}

fn s2() -> fd_core::AlgebraModel {
    by_id("omega2s2", 16).unwrap()
}

fn un(n: u32) -> Polynomial {
    Polynomial::generator(u(n, 1))
}

#[test]
fn bv_of_u2_from_q1() {
    let m = s3();
    let e = Expr::delta(1, Expr::q(1, Expr::gen("u1")));
    assert_eq!(e.eval(&m).unwrap(), un(1).pow(4));
}

#[test]
fn delta_zero_is_identity() {
    let m = s3();
    let x = &un(1) * &un(3) + un(2).square();
    assert_eq!(ops::delta(0, &x, &m).unwrap(), x);
}

#[test]
fn self_bracket_vanishes() {
    assert!(Expr::bracket(Expr::gen("u1"), Expr::gen("u1")).eval(&s3()).unwrap().is_zero());
}

#[test]
fn q_lower_examples() {
    let m = s3();
    assert_eq!(ops::q_lower(0, &un(1), &m).unwrap(), un(1).square());
    assert_eq!(ops::q_lower(1, &(un(1) + un(2)), &m).unwrap(), un(2) + un(3));
    assert!(ops::q_lower(1, &Polynomial::zero(), &m).unwrap().is_zero());
    assert!(matches!(ops::q_lower(2, &un(1), &m), Err(Error::IndexOutOfRange { .. })));
}

#[test]
fn q_upper_examples() {
    let m = s3();
    assert!(ops::q_upper(2, &un(2), &m).unwrap().is_zero());
    assert_eq!(ops::q_upper(3, &un(2), &m).unwrap(), un(2).square());
    assert!(matches!(ops::q_upper(4, &(un(1) + un(2)), &m), Err(Error::InhomogeneousPolynomial)));
}

#[test]
fn delta_on_product_examples() {
    let m = s3();
    let got = ops::delta_on_product(1, &un(1), &un(2), &m).unwrap();
    assert_eq!(got, &un(1).square() * &un(2) + un(1).pow(5));
    assert!(ops::delta_on_product(1, &un(1), &un(1), &m).unwrap().is_zero());
    let xy = &un(1) * &un(3);
    assert_eq!(ops::delta_on_product(0, &un(1), &un(3), &m).unwrap(), xy);
}

#[test]
fn delta_on_bracket_examples() {
    assert!(ops::delta_on_bracket(1, &un(1), &un(2), &s3()).unwrap().is_zero());
    let m = s2();
    let one = Polynomial::component_class(1);
    let u1 = Polynomial::generator(u(1, 0));
    assert!(ops::delta_on_bracket(1, &one, &u1, &m).unwrap().is_zero());
}

#[test]
fn delta_on_q_examples() {
    let m = s3();
    assert_eq!(ops::delta_on_q(1, 1, &un(1), &m).unwrap(), un(1).pow(4));
    assert_eq!(ops::delta_on_q(0, 1, &un(2), &m).unwrap(), un(3));
}

#[test]
fn bracket_by_bv_defect() {
    let m = s2();
    let one = Polynomial::component_class(1);
    let u1 = Polynomial::generator(u(1, 0));
    assert!(ops::bracket_via_bv_defect(&one, &u1, &m).unwrap().is_zero());
    assert!(ops::bracket_via_bv_defect(&u1, &u1, &m).unwrap().is_zero());
    assert!(ops::bracket_via_bv_defect(&u1, &Polynomial::one(), &m).unwrap().is_zero());
}

#[test]
fn bracket_with_q1_examples() {
    let m = s2();
    let one = Polynomial::component_class(1);
    let u1 = Polynomial::generator(u(1, 0));
    assert!(ops::bracket_with_q1(&one, &u1, &m).unwrap().is_zero());
    assert!(ops::bracket_with_q1(&un(1), &un(2), &s3()).unwrap().is_zero());
}

#[test]
fn primitive_delta_examples() {
    let m = s3();
    assert_eq!(ops::primitive_delta(1, &un(3), &m).unwrap(), ops::delta(1, &un(3), &m).unwrap());
    assert!(matches!(ops::primitive_delta(2, &un(1), &m), Err(Error::EvenIndex(2))));
    assert!(matches!(ops::primitive_delta(3, &un(1), &m), Err(Error::IndexOutOfRange { .. })));
}

#[test]
fn unknown_generator() {
    assert!(matches!(Expr::gen("u99").eval(&s3()), Err(Error::UnknownGenerator(_))));
}

#[test]
fn stored_and_derived_bv_agree() {
    let mut cfg = LoopModelConfig::for_degree(1, 32);
    let derived = omega2_sphere_model(&cfg).unwrap();
    cfg.bv = BvSource::Stored;
    let stored = omega2_sphere_model(&cfg).unwrap();
    for n in 1..=6 {
        let x = un(n);
        assert_eq!(ops::delta(1, &x, &derived).unwrap(), un(1).pow(1 << n));
        assert_eq!(ops::delta(1, &x, &stored).unwrap(), un(1).pow(1 << n));
    }
}

#[test]
fn component_operations_in_omega2s2() {
    let m = s2();
    let u1 = Polynomial::generator(u(1, 0));
    for c in -8i64..=8 {
        let bv = ops::delta(1, &Polynomial::component_class(c), &m).unwrap();
        let want = if c.rem_euclid(2) == 1 { u1.shift_component(c) } else { Polynomial::zero() };
        assert_eq!(bv, want, "BV([{c}])");
        let q = ops::q_lower(1, &Polynomial::component_class(c), &m).unwrap();
        let want = if c.rem_euclid(2) == 1 { u1.shift_component(2 * c) } else { Polynomial::zero() };
        assert_eq!(q, want, "Q1([{c}])");
    }
}

#[test]
fn trivial_bv_for_large_spheres() {
    for id in ["omega2s4", "omega2s5"] {
        let m = by_id(id, 40).unwrap();
        for x in m.basis(40) {
            assert!(ops::delta(1, &x.into(), &m).unwrap().is_zero());
        }
    }
}

use fd_core::algebra::Monomial;
use fd_core::models::omega2::{bv_closed_form, omega2_sphere_model, u, LoopModelConfig};
use fd_core::models::so::d_poly;
use fd_core::{lucas_binom, ops, Polynomial};
use proptest::prelude::*;

fn pascal_table(n: usize) -> Vec<Vec<bool>> {
    let mut rows = vec![vec![true]];
    for a in 1..=n {
        let prev = &rows[a - 1];
        let row = (0..=a).map(|b| b == 0 || b == a || (prev[b - 1] ^ prev[b])).collect();
        rows.push(row);
    }
    rows
}

#[test]
fn lucas_matches_pascal() {
    let t = pascal_table(64);
    for a in 0..=64u64 {
        for b in 0..=64u64 {
            let expected = b <= a && t[a as usize][b as usize];
            assert_eq!(lucas_binom(a, b), expected, "C({a},{b})");
        }
    }
    assert!(lucas_binom(7, 0));
    assert!(!lucas_binom(4, 2));
    assert!(lucas_binom(3, 1));
}

#[test]
fn multiplication_examples() {
    let g = |n| Polynomial::generator(u(n, 1));
    let lhs = ops::product(&(g(1) + g(2)), &g(1));
    assert_eq!(lhs, g(1).square() + ops::product(&g(1), &g(2)));
    let lhs = ops::product(&(d_poly(1) + d_poly(2)), &d_poly(1));
    assert_eq!(lhs, ops::product(&d_poly(2), &d_poly(1)));
    assert!(ops::product(&g(3), &Polynomial::zero()).is_zero());
}

#[test]
fn closed_form_matches_engine() {
    let m = omega2_sphere_model(&LoopModelConfig::for_degree(1, 32)).unwrap();
    for mono in m.basis(32) {
        let x = Polynomial::from(mono.clone());
        let engine = ops::bv(&x, &m).unwrap();
        assert_eq!(bv_closed_form(&mono, 1).unwrap(), engine, "{mono}");
        if !engine.is_zero() {
            assert_eq!(engine.degree().unwrap(), Some(mono.degree() + 1));
        }
    }
}

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    // Exponents of u1..u4 (degrees 1, 3, 7, 15), total degree ≤ 32.
    prop::collection::vec(prop::collection::vec(0u32..4, 4), 0..5).prop_map(|terms| {
        let mut p = Polynomial::zero();
        for exps in terms {
            let factors = exps.iter().enumerate().map(|(i, e)| (u(i as u32 + 1, 1), *e));
            let mono = Monomial::from_factors(factors, 0).unwrap();
            if mono.degree() <= 32 {
                p.toggle(mono);
            }
        }
        p
    })
}

proptest! {
    #[test]
    fn addition_is_involutive(p in poly_strategy()) {
        prop_assert!((p.clone() + p).is_zero());
    }

    #[test]
    fn multiplication_is_associative_and_commutative(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(ops::product(&a, &b), ops::product(&b, &a));
        let l = ops::product(&ops::product(&a, &b), &c);
        let r = ops::product(&a, &ops::product(&b, &c));
        prop_assert_eq!(l, r);
        prop_assert_eq!(ops::product(&a, &(b.clone() + c.clone())), ops::product(&a, &b) + ops::product(&a, &c));
    }
}

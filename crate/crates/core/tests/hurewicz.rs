use fd_core::hurewicz::*;
use fd_core::models::qs0::{hopf_class, qs0_fragment, QS0FragmentConfig};
use fd_core::{AlgebraModel, Error, Polynomial};

fn frag() -> AlgebraModel {
    qs0_fragment(&QS0FragmentConfig::default()).unwrap()
}

#[test]
fn hur_of_j_examples() {
    let (t, f) = (ImJTable::standard(16), frag());
    assert_eq!(hur_of_j(1, &t, &f).unwrap().to_string(), "q1");
    assert_eq!(hur_of_j(3, &t, &f).unwrap().to_string(), "t3");
    assert_eq!(hur_of_j(7, &t, &f).unwrap(), hopf_class(7).unwrap());
    assert!(hur_of_j(15, &t, &f).unwrap().is_zero());
    assert_eq!(hur_of_j(5, &t, &f).unwrap_err(), Error::NotInImageOfJ(5));
    assert_eq!(hur_of_j(0, &t, &f).unwrap_err(), Error::NotInImageOfJ(0));
}

#[test]
fn composition_examples() {
    let f = frag();
    let eta = hopf_class(1).unwrap();
    assert!(compose_with_spherical(&eta, 2, &f).unwrap().is_zero());
    let sq = compose_with_spherical(&eta, 1, &f).unwrap();
    assert_eq!(sq, eta.square());
    let nu = hopf_class(3).unwrap();
    assert_eq!(compose_with_spherical(&nu, 3, &f).unwrap(), nu.square());
    // [1] ∘ a = a, products of positive-degree classes compose to 0
    assert_eq!(compose_with_spherical(&Polynomial::component_class(1), 4, &f).unwrap(), spherical(4));
    assert!(compose_with_spherical(&eta.square(), 5, &f).unwrap().is_zero());
    assert!(compose_with_spherical(&nu, 4, &f).is_err());
}

#[test]
fn divisibility_examples() {
    let t = ImJTable::standard(32);
    let v = |p, q| check_divisible(p, q, &t).unwrap();
    assert_eq!(v(3, 0).verdict, Verdict::Detected);
    assert_eq!(v(1, 2).reasons, vec![Reason::BvSquaredZero, Reason::OddClassKillsSquares]);
    assert_eq!(v(1, 3), Decision { verdict: Verdict::Annihilated, reasons: vec![Reason::Unstability] });
    assert_eq!(v(15, 0).reasons, vec![Reason::HurewiczSo]);
    assert_eq!(v(7, 2).verdict, Verdict::OutOfScope);
    assert_eq!(check_divisible(4, 0, &t).unwrap_err(), Error::NotInImageOfJ(4));
}

#[test]
fn detected_set_is_exactly_hopf_classes_and_squares() {
    let t = ImJTable::standard(32);
    let mut detected = Vec::new();
    for p in (1..=32).filter(|d| t.in_image(*d)) {
        for q in 0..=40 {
            if check_divisible(p, q, &t).unwrap().verdict == Verdict::Detected {
                detected.push((p, q));
            }
        }
    }
    assert_eq!(detected, vec![(1, 0), (1, 1), (3, 0), (3, 3), (7, 0), (7, 7)]);
}

#[test]
fn hurewicz_suite() {
    let r = reproduce_paper_computations(&frag(), &ImJTable::standard(16)).unwrap();
    let bad: Vec<_> = r.failures().collect();
    assert!(bad.is_empty(), "{bad:#?}");
    let cube = r.records.iter().find(|x| x.input == "hur(η³)").unwrap();
    assert_eq!(cube.actual, "0");
    let nu2 = r.records.iter().find(|x| x.input == "hur(ν²)").unwrap();
    assert_eq!(nu2.actual, "t3^2");
}

#[test]
fn table_validation() {
    let bad = ImJEntry { in_image: true, hurewicz_nonzero: true };
    assert!(ImJTable::from_entries([(9, bad)]).is_err());
    assert!(ImJTable::from_entries([(3, bad)]).is_ok());
}

#[test]
fn square_classes() {
    let f = frag();
    let s = hopf_square(3, &f).unwrap();
    assert!(s.is_kervaire_square && s.degree == 6);
    assert_eq!(s.hurewicz.unwrap(), hopf_class(3).unwrap().square());
}

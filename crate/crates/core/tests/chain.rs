use fd_core::chain::cells::{build_so_cells, build_wn, so_act, top_class_hit, wn_quotient, LemmaVariant, SphereCell};
use fd_core::chain::checks::{diagonal_oracle, oracle_check, sq_pascal, OracleParams, CHECKS};
use fd_core::chain::complex::ChainComplex;
use fd_core::chain::square::{unquotiented, Canon, Coefficients, ExtendedSquare};
use fd_core::linalg::{BitVec, Gf2Matrix};
use fd_core::Error;

fn assert_passes(id: &str, p: &OracleParams) {
    let r = oracle_check(id, p).unwrap();
    let bad: Vec<_> = r.failures().collect();
    assert!(bad.is_empty(), "{id} {p:?}: {bad:#?}");
    assert!(!r.records.is_empty());
}

#[test]
fn wn_differential_and_homology() {
    let w = build_wn(3);
    w.check().unwrap();
    // d(e^1) = e^0 + Te^0
    assert_eq!(w.d[1].column(0), &BitVec::from_indices(2, [0, 1]));
    assert_eq!(w.homology().unwrap().dims(), vec![1, 0, 0, 1]);
    let h = build_wn(2).homology().unwrap();
    assert_eq!(h.degrees[2].reps, vec![BitVec::from_indices(2, [0, 1])]);
    assert_eq!(wn_quotient(2).homology().unwrap().dims(), vec![1, 1, 1]);
    assert!(ChainComplex::zero_differential(vec![]).homology().unwrap().dims().is_empty());
}

#[test]
fn non_complex_rejected() {
    let mut c = ChainComplex::zero_differential(vec![vec!["a".into()], vec!["b".into()], vec!["c".into()]]);
    c.d[1] = Gf2Matrix::identity(1);
    c.d[2] = Gf2Matrix::identity(1);
    assert_eq!(c.homology().unwrap_err(), Error::NotAComplex { degree: 2 });
}

#[test]
fn so_cells() {
    let so = build_so_cells(4);
    assert_eq!(so.masks[3], vec![0b0110, 0b1000]);
    assert!(so.complex.d.iter().all(Gf2Matrix::is_zero));
    // D d^2 = d^2⊗1 + d^1⊗d^1 + 1⊗d^2
    let mut diag = so.diagonal(0b100);
    diag.sort();
    assert_eq!(diag, vec![(0, 0b100), (0b10, 0b10), (0b100, 0)]);
    assert_eq!(diagonal_oracle(0b100), diag.into_iter().collect());
}

#[test]
fn cellular_action() {
    let v = LemmaVariant::Proof;
    assert_eq!(so_act(v, 0b10, SphereCell::e(0)), vec![SphereCell::e(1), SphereCell::te(1)]);
    assert_eq!(so_act(v, 0, SphereCell::e(2)), vec![SphereCell::e(2)]);
    assert!(so_act(v, 0b10, SphereCell::e(1)).is_empty());
    assert!(top_class_hit(3, v));
    assert!(!top_class_hit(3, LemmaVariant::Literal));
}

#[test]
fn extended_square_examples() {
    let sq = ExtendedSquare::new(2, Coefficients::generators(&[0])).unwrap();
    assert_eq!(sq.homology().dims(), vec![1, 1, 1]);
    let sq = ExtendedSquare::new(1, Coefficients::generators(&[0, 1])).unwrap();
    assert_eq!(sq.homology().dims().iter().sum::<usize>(), 6);
    assert_eq!(sq.canonical_basis().len(), 6);
    let u = unquotiented(&sq);
    u.complex.check().unwrap();
    fd_core::chain::complex::is_chain_map(&u.quotient, &u.complex, &sq.complex).unwrap();
    let big = Coefficients::generators(&[0; 33]);
    assert!(matches!(ExtendedSquare::new(1, big), Err(Error::SizeLimitExceeded { .. })));
}

#[test]
fn xi_on_bracket() {
    let sq = ExtendedSquare::new(2, Coefficients::generators(&[1, 1])).unwrap();
    let (deg, v) = sq.canon_chain(Canon::B(0, 1));
    assert_eq!(sq.xi(deg, &v), [(0, 1), (1, 0)].into_iter().collect());
    let (deg, v) = sq.canon_chain(Canon::P(0, 1));
    assert!(sq.xi(deg, &v).is_empty());
}

/// The Pascal-based `Sq_*` oracle agrees with the engine's Lucas-based one.
#[test]
fn sq_oracles_agree() {
    use fd_core::models::so::{exterior_monomial, sq_dual};
    use fd_core::Polynomial;
    for mask in (0u32..64).filter(|m| m & 1 == 0) {
        for k in 0..8 {
            let engine = sq_dual(k, &Polynomial::from(exterior_monomial(mask)));
            let oracle: Polynomial = sq_pascal(k, mask).into_iter().map(exterior_monomial).collect();
            assert_eq!(engine, oracle, "Sq^{k} {mask:b}");
        }
    }
}

#[test]
fn all_checks_pass_for_small_n() {
    for n in [2, 3] {
        for id in CHECKS {
            assert_passes(id, &OracleParams::new(n));
        }
    }
    assert_passes("basis-formula", &OracleParams::new(1).with_degrees(&[0, 1]));
    assert_passes("zeta-xi", &OracleParams::new(1).with_degrees(&[0, 0]));
}

#[test]
fn calculfinal_other_bases() {
    for base in [0, 2, 3] {
        for n in [2, 3] {
            assert_passes("calculfinal-composite", &OracleParams::new(n).with_base(base));
        }
    }
}

#[test]
fn spec_examples() {
    let r = oracle_check("a1-bar", &OracleParams::new(2)).unwrap();
    let rec = r.records.iter().find(|r| r.input == "ā₁(d_1⊗[e^0⊗g0⊗g0])").unwrap();
    assert_eq!(rec.actual, "0");
    let r = oracle_check("a1-bar", &OracleParams::new(3)).unwrap();
    let rec = r.records.iter().find(|r| r.input == "ā₁(d_2⊗[e^0⊗g0⊗g1])").unwrap();
    assert_eq!(rec.actual, "[e^2⊗g0⊗g1]");
    let r = oracle_check("zeta-xi", &OracleParams::new(2)).unwrap();
    let rec = r.records.iter().find(|r| r.input == "ξ[e^2⊗g0⊗g1]").unwrap();
    assert_eq!(rec.actual, "b_2⊗g0⊗g1 + b_2⊗g1⊗g0");
    let rec = r.records.iter().find(|r| r.input == "ξ[e^0⊗g0⊗g1]").unwrap();
    assert_eq!(rec.actual, "0");
    // b_0⊗g⊗g lands on the Kudo-Araki element [e^0⊗g⊗g], not zero.
    let rec = r.records.iter().find(|r| r.input == "ζ(b_0⊗g0⊗g0)").unwrap();
    assert_eq!(rec.actual, "[e^0⊗g0⊗g0]");
}

#[test]
fn literal_lemma_contradicts_top_class() {
    let p = OracleParams::new(3).with_lemma(LemmaVariant::Literal);
    let r = oracle_check("a1-bar", &p).unwrap();
    assert!(!r.passed());
    assert!(r.failures().any(|f| f.input == "d^2.e^0 = e^2 + Te^2"));
}

#[test]
fn unknown_check_rejected() {
    assert!(oracle_check("nope", &OracleParams::new(2)).is_err());
    assert!(oracle_check("psi", &OracleParams::new(1)).is_err());
}

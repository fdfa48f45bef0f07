use std::process::Command;

use fd_core::Expr;
use fdisks::parse;
use proptest::prelude::*;

fn fdisks(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_fdisks")).args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn normalize_spec_example() {
    assert_eq!(fdisks(&["normalize", "--model", "omega2s3", "D1(Q1(u1))"]), ("u1^4\n".into(), 0));
    assert_eq!(fdisks(&["normalize", "--model", "omega2s3", "B(u1,u1)+u1^2"]).0, "u1^2\n");
    let (out, code) = fdisks(&["--format", "json", "normalize", "--model", "omega2s2", "D1([3])"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"model\":\"omega2s2\",\"input\":\"D1([3])\",\"value\":\"u1*[3]\"}\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(fdisks(&["normalize", "--model", "omega2s3", "D1(Q1(u1"]).1, 2);
    assert_eq!(fdisks(&["normalize", "--model", "omega2s3", "v7"]).1, 2);
    assert_eq!(fdisks(&["verify", "--model", "nowhere", "--relation", "poisson"]).1, 2);
    assert_eq!(fdisks(&["verify", "--model", "omega2s3", "--relation", "poisson", "--max-degree", "0"]).1, 2);
    assert_eq!(fdisks(&["chain-check", "--check", "nothing"]).1, 2);
    assert_eq!(fdisks(&["hurewicz", "--psi-degree", "5", "--theta-degree", "0"]).1, 2);
    assert_eq!(fdisks(&["frobnicate"]).1, 2);
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = ["--format", "json", "verify", "--model", "omega2s3", "--relation", "comm:bv:q", "--max-degree", "32"];
    let (a, code) = fdisks(&args);
    assert_eq!(code, 0);
    assert!(a.contains("\"fail\":0"));
    assert_eq!(fdisks(&args).0, a);
}

#[test]
fn failing_check_exits_1() {
    let (out, code) = fdisks(&["chain-check", "--check", "a1-bar", "--n", "3", "--literal-lemma"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL  d^2.e^0 = e^2 + Te^2"));
}

#[test]
fn bv_table_trivial_for_s4() {
    let (out, code) = fdisks(&["bv-table", "--model", "omega2s(4)", "--max-degree", "40"]);
    assert_eq!(code, 0);
    assert!(out.lines().count() > 10);
    assert!(out.lines().all(|l| l.ends_with(" = 0")), "{out}");
}

#[test]
fn chain_checks_pass() {
    for check in fd_core::chain::checks::CHECKS {
        for n in ["2", "3"] {
            let (out, code) = fdisks(&["chain-check", "--check", check, "--n", n]);
            assert_eq!(code, 0, "{check} n={n}: {out}");
        }
    }
}

#[test]
fn hurewicz_subcommand() {
    let (out, code) = fdisks(&["hurewicz"]);
    assert_eq!(code, 0, "{out}");
    let (out, _) = fdisks(&["hurewicz", "--psi-degree", "1", "--theta-degree", "2"]);
    assert!(out.contains("annihilated (bv-squared-zero, odd-class-kills-squares)"), "{out}");
}

fn expr_strategy() -> impl Strategy<Value = Expr> {
    let names = prop::sample::select(vec!["u1", "u2", "d3", "x0", "qx1_0", "t3"]);
    let leaf = prop_oneof![
        (names, 1u32..4).prop_map(|(n, e)| Expr::Gen(n.to_string(), e)),
        (-9i64..9).prop_map(Expr::Component),
    ];
    leaf.prop_recursive(5, 64, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(Expr::Sum),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::product(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::bracket(a, b)),
            (0u32..4, inner.clone()).prop_map(|(i, a)| Expr::q(i, a)),
            (0u32..4, inner.clone()).prop_map(|(i, a)| Expr::q_upper(i, a)),
            (0u32..4, inner.clone()).prop_map(|(i, a)| Expr::delta(i, a)),
            (0u32..4, inner).prop_map(|(i, a)| Expr::delta_primitive(i, a)),
        ]
    })
}

proptest! {
    #[test]
    fn parse_render_round_trip(e in expr_strategy()) {
        prop_assert!(e.depth() <= 6);
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e);
    }
}

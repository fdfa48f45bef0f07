//! Sweeps of the structure relations over the basis of a model.
//!
//! Each relation compares an engine evaluation of the left side with the
//! relation's right side, instance by instance. Evaluation errors become
//! failing records rather than aborting the sweep.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{Monomial, Polynomial};
use crate::model::{AlgebraModel, Disks};
use crate::ops;
use crate::report::VerificationReport;
use crate::{Error, Result};

pub const RELATIONS: [&str; 11] = [
    "theo:bat",
    "theo:bat:1",
    "theo:bat:2",
    "higherbv",
    "comm:bv:q",
    "quadratic",
    "poisson",
    "bv-squared-zero",
    "bracket-q1",
    "squares-killed",
    "stable-delta-q",
];

/// Pair and triple sweeps larger than this are sampled instead.
pub const SAMPLE_CAP: usize = 3000;

pub fn verify_relation(id: &str, m: &AlgebraModel, bound: u32) -> Result<VerificationReport> {
    verify_relation_seeded(id, m, bound, 0)
}

pub fn verify_relation_seeded(id: &str, m: &AlgebraModel, bound: u32, seed: u64) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(id)
        .with_param("model", &m.name)
        .with_param("max-degree", bound)
        .with_param("seed", seed);
    let basis = m.basis(bound);
    let mut rng = SmallRng::seed_from_u64(seed);
    let top = m.disks.top();
    match id {
        "theo:bat" => {
            for (x, y) in pairs(&basis, bound, &mut rng) {
                for i in indices(m, 1) {
                    let lhs = ops::delta(i, &(&x * &y), m);
                    let rhs = ops::delta_on_product(i, &x, &y, m);
                    check(&mut rep, format!("D{i}(({x})*({y}))"), rhs, lhs);
                }
            }
        }
        "theo:bat:1" => {
            for (x, y) in pairs(&basis, bound, &mut rng) {
                for i in indices(m, 1).filter(|i| i % 2 == 1) {
                    let lhs = ops::primitive_delta(i, &(&x * &y), m);
                    let rhs = (|| {
                        let mut r = &ops::primitive_delta(i, &x, m)? * &y;
                        r += &x * &ops::primitive_delta(i, &y, m)?;
                        if m.disks.is_top(i) {
                            r += ops::bracket(&x, &y, m)?;
                        }
                        Ok(r)
                    })();
                    check(&mut rep, format!("DP{i}(({x})*({y}))"), rhs, lhs);
                }
            }
        }
        "theo:bat:2" => {
            for (x, y) in pairs(&basis, bound, &mut rng) {
                for i in indices(m, 1) {
                    let lhs = ops::bracket(&x, &y, m).and_then(|b| ops::delta(i, &b, m));
                    let rhs = ops::delta_on_bracket(i, &x, &y, m);
                    check(&mut rep, format!("D{i}(B({x},{y}))"), rhs, lhs);
                }
            }
        }
        "higherbv" => {
            for x in singles(&basis) {
                for j in indices(m, 0) {
                    for i in indices(m, 0) {
                        let lhs = ops::q_lower(j, &x, m).and_then(|q| ops::delta(i, &q, m));
                        let rhs = ops::delta_on_q(i, j, &x, m);
                        check(&mut rep, format!("D{i}(Q{j}({x}))"), rhs, lhs);
                    }
                }
            }
        }
        "comm:bv:q" => {
            require_n2(m)?;
            for x in singles(&basis) {
                let lhs = ops::delta_on_q(1, 1, &x, m);
                let rhs = (|| {
                    let dx = ops::delta(1, &x, m)?;
                    Ok(ops::bracket(&dx, &x, m)? + dx.square())
                })();
                check(&mut rep, format!("D1(Q1({x}))"), rhs, lhs);
            }
        }
        "quadratic" => {
            for (x, y) in pairs(&basis, bound, &mut rng).into_iter().filter(|(x, y)| same_degree(x, y)) {
                for j in indices(m, 1) {
                    let lhs = ops::q_lower(j, &(&x + &y), m);
                    let rhs = (|| {
                        let mut r = ops::q_lower(j, &x, m)? + ops::q_lower(j, &y, m)?;
                        if m.disks.is_top(j) {
                            r += ops::bracket(&x, &y, m)?;
                        }
                        Ok(r)
                    })();
                    check(&mut rep, format!("Q{j}({x}+{y})"), rhs, lhs);
                }
            }
        }
        "poisson" => {
            for (a, b, c) in triples(&basis, bound, &mut rng) {
                let lhs = ops::bracket(&a, &(&b * &c), m);
                let rhs = (|| Ok(&ops::bracket(&a, &b, m)? * &c + &b * &ops::bracket(&a, &c, m)?))();
                check(&mut rep, format!("B({a},({b})*({c}))"), rhs, lhs);
            }
            for (x, y) in pairs(&basis, bound, &mut rng) {
                check(&mut rep, format!("B({x},{x})"), Ok(Polynomial::zero()), ops::bracket(&x, &x, m));
                check(&mut rep, format!("B({x},{y})"), ops::bracket(&y, &x, m), ops::bracket(&x, &y, m));
            }
        }
        "bv-squared-zero" => {
            for x in singles(&basis) {
                let lhs = ops::bv(&x, m).and_then(|b| ops::bv(&b, m));
                check(&mut rep, format!("BV(BV({x}))"), Ok(Polynomial::zero()), lhs);
            }
        }
        "bracket-q1" => {
            require_n2(m)?;
            for (x, y) in pairs(&basis, bound, &mut rng) {
                let lhs = ops::q_lower(1, &y, m).and_then(|q| ops::bracket(&x, &q, m));
                let rhs = ops::bracket_with_q1(&x, &y, m);
                check(&mut rep, format!("B({x},Q1({y}))"), rhs, lhs);
            }
        }
        "squares-killed" => {
            let odd: Vec<u32> = match top {
                Some(t) => (1..=t).filter(|i| i % 2 == 1).collect(),
                None => crate::models::qs0::HOPF_DEGREES.to_vec(),
            };
            for x in singles(&basis) {
                for &i in &odd {
                    let sq = x.square();
                    check(&mut rep, format!("DP{i}(({x})^2)"), Ok(Polynomial::zero()), ops::primitive_delta(i, &sq, m));
                    if top.is_some_and(|t| i < t) {
                        check(&mut rep, format!("D{i}(({x})*({x}))"), Ok(Polynomial::zero()), ops::delta_on_product(i, &x, &x, m));
                    }
                }
            }
        }
        "stable-delta-q" => {
            if top.is_some() {
                return Err(Error::UnsupportedConfig(format!("stable-delta-q needs a stable model, got {}", m.name)));
            }
            for x in singles(&basis).into_iter().filter(|x| *x != Polynomial::one()) {
                for i in (2..=bound.min(8)).step_by(2) {
                    for j in 0..(2 * i).min(bound + 1) {
                        stable_instance(&mut rep, i, j, &x, m);
                    }
                }
            }
        }
        _ => return Err(Error::UnsupportedConfig(format!("unknown relation `{id}`"))),
    }
    Ok(rep)
}

/// `Δ_i Q_j x` against `Q_j Δ_{i/2} x`: passes when the stated term occurs,
/// and reports whatever else the general sum produces.
fn stable_instance(rep: &mut VerificationReport, i: u32, j: u32, x: &Polynomial, m: &AlgebraModel) {
    let input = format!("D{i}(Q{j}({x}))");
    let full = ops::delta_on_q(i, j, x, m);
    let term = ops::delta(i / 2, x, m).and_then(|d| ops::q_lower(j, &d, m));
    match (full, term) {
        (Ok(full), Ok(term)) => {
            let contained = term.terms().all(|t| full.contains(t));
            let residual = full.clone() + term.clone();
            let actual = if residual.is_zero() { full.to_string() } else { format!("{full} (residual {residual})") };
            rep.record(input, format!("contains {term}"), actual, contained);
        }
        (a, b) => rep.record(input, show(&b), show(&a), false),
    }
}

fn check(rep: &mut VerificationReport, input: String, expected: Result<Polynomial>, actual: Result<Polynomial>) {
    let pass = matches!((&expected, &actual), (Ok(e), Ok(a)) if e == a);
    rep.record(input, show(&expected), show(&actual), pass);
}

fn show(r: &Result<Polynomial>) -> String {
    match r {
        Ok(p) => p.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn require_n2(m: &AlgebraModel) -> Result<()> {
    if m.disks == Disks::Finite(2) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { op: "D", index: 1, n: m.disks.n() })
    }
}

/// Operation indices `from..=n-1`; in the stable case `from..=3`.
fn indices(m: &AlgebraModel, from: u32) -> impl Iterator<Item = u32> {
    from..=m.disks.top().unwrap_or(3)
}

fn same_degree(x: &Polynomial, y: &Polynomial) -> bool {
    x.degree().ok() == y.degree().ok()
}

fn singles(basis: &[Monomial]) -> Vec<Polynomial> {
    basis.iter().cloned().map(Polynomial::from).collect()
}

/// All pairs with `|x| + |y| ≤ bound`, or a seeded sample of them.
pub fn pairs(basis: &[Monomial], bound: u32, rng: &mut SmallRng) -> Vec<(Polynomial, Polynomial)> {
    let all: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|a| (0..basis.len()).map(move |b| (a, b)))
        .filter(|(a, b)| basis[*a].degree() + basis[*b].degree() <= bound)
        .collect();
    let chosen: Vec<(usize, usize)> = if all.len() <= SAMPLE_CAP {
        all
    } else {
        (0..SAMPLE_CAP).map(|_| all[rng.gen_range(0..all.len())]).collect()
    };
    chosen.into_iter().map(|(a, b)| (basis[a].clone().into(), basis[b].clone().into())).collect()
}

/// Seeded sample of triples with total degree at most `bound`.
pub fn triples(basis: &[Monomial], bound: u32, rng: &mut SmallRng) -> Vec<(Polynomial, Polynomial, Polynomial)> {
    let mut out = Vec::new();
    if basis.is_empty() {
        return out;
    }
    let mut tries = 0;
    while out.len() < SAMPLE_CAP / 3 && tries < 50 * SAMPLE_CAP {
        tries += 1;
        let (a, b, c) = (pick(basis, rng), pick(basis, rng), pick(basis, rng));
        if a.degree() + b.degree() + c.degree() <= bound {
            out.push((a.clone().into(), b.clone().into(), c.clone().into()));
        }
    }
    out
}

fn pick<'a>(basis: &'a [Monomial], rng: &mut SmallRng) -> &'a Monomial {
    &basis[rng.gen_range(0..basis.len())]
}

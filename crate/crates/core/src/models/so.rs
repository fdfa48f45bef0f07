//! `H_*SO(n) = Λ(d_1, …, d_{n-1})` with its Cartan diagonal and dual
//! Steenrod action, and the primitives `p_i`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{lucas_binom, Family, Generator, Monomial, Polynomial};
use crate::linalg::{BitVec, Gf2Matrix};
use crate::model::{AlgebraModel, Disks};

/// An element of `H ⊗ H` as a set of basis tensors.
pub type Tensor = BTreeSet<(Monomial, Monomial)>;

pub fn d(i: u32) -> Generator {
    Generator::new(Family::D, vec![i], i)
}

/// `d_i` as a polynomial, with `d_0 = 1`.
pub fn d_poly(i: u32) -> Polynomial {
    if i == 0 {
        Polynomial::one()
    } else {
        Polynomial::generator(d(i))
    }
}

/// The exterior model on `d_1, …, d_{n-1}`. It carries no operations beyond
/// the product; the diagonal and `Sq^k_*` live in this module.
pub fn so_model(n: u32) -> AlgebraModel {
    let mut m = AlgebraModel::new(alloc::format!("so({n})"), Disks::Finite(n.max(2)));
    for i in 1..n {
        m.add_generator(d(i));
    }
    m
}

/// Exterior monomial `d_S` for an index set given as a bitmask over `1..n`.
pub fn exterior_monomial(mask: u32) -> Monomial {
    Monomial::from_factors((1..32).filter(|i| mask & (1 << i) != 0).map(|i| (d(i), 1)), 0)
        .expect("distinct exterior factors")
}

/// Exterior monomials of the given degree in `Λ(d_1, …, d_{n-1})`, in
/// canonical order.
pub fn exterior_basis(degree: u32, n: u32) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = (0u32..(1 << n))
        .filter(|mask| mask & 1 == 0 && crate::ops::degree_of_mask(*mask) == degree)
        .map(exterior_monomial)
        .collect();
    out.sort();
    out
}

fn toggle(t: &mut Tensor, pair: (Monomial, Monomial)) {
    if !t.remove(&pair) {
        t.insert(pair);
    }
}

/// `D_*` on a basis monomial: multiplicative extension of
/// `D_* d_k = Σ_{i+j=k} d_i ⊗ d_j`.
pub fn diagonal(m: &Monomial) -> Tensor {
    let mut acc = Tensor::new();
    acc.insert((Monomial::one(), Monomial::one()));
    for (g, e) in m.factors() {
        for _ in 0..*e {
            let k = g.index();
            let mut next = Tensor::new();
            for (l, r) in &acc {
                for i in 0..=k {
                    let (a, b) = (mono_d(i), mono_d(k - i));
                    if let (Some(l2), Some(r2)) = (l.mul(&a), r.mul(&b)) {
                        toggle(&mut next, (l2, r2));
                    }
                }
            }
            acc = next;
        }
    }
    acc
}

fn mono_d(i: u32) -> Monomial {
    if i == 0 {
        Monomial::one()
    } else {
        Monomial::generator(d(i))
    }
}

/// `D_* x - x ⊗ 1 - 1 ⊗ x` for a polynomial `x`.
pub fn reduced_diagonal(x: &Polynomial) -> Tensor {
    let mut t = Tensor::new();
    for m in x.terms() {
        for pair in diagonal(m) {
            toggle(&mut t, pair);
        }
        toggle(&mut t, (m.clone(), Monomial::one()));
        toggle(&mut t, (Monomial::one(), m.clone()));
    }
    t
}

/// The space of primitives in one degree of `H_*SO(n)`, as the kernel of the
/// reduced diagonal.
pub fn primitive_space(degree: u32, n: u32) -> Vec<Polynomial> {
    let basis = exterior_basis(degree, n);
    let images: Vec<Tensor> = basis.iter().map(|m| reduced_diagonal(&Polynomial::from(m.clone()))).collect();
    let rows: Vec<(Monomial, Monomial)> = images.iter().flatten().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let cols = images
        .iter()
        .map(|t| BitVec::from_indices(rows.len(), t.iter().map(|p| rows.binary_search(p).expect("row present"))))
        .collect();
    Gf2Matrix::from_columns(rows.len(), cols)
        .kernel()
        .into_iter()
        .map(|v| v.ones().map(|k| basis[k].clone()).collect())
        .collect()
}

/// The unique nonzero primitive of the given degree, or zero when the
/// primitive space is trivial.
///
/// # Panics
/// If the primitive space has dimension greater than one, which does not
/// happen for the exterior algebra `H_*SO(n)`.
pub fn compute_primitive(degree: u32, n: u32) -> Polynomial {
    let mut space = primitive_space(degree, n);
    assert!(space.len() <= 1, "primitive space of dimension {}", space.len());
    space.pop().unwrap_or_default()
}

/// `Sq^k_* d_i = C(i-k, k) d_{i-k}`, extended by the Cartan formula.
pub fn sq_dual(k: u32, x: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for m in x.terms() {
        out += sq_dual_mono(k, m);
    }
    out
}

fn sq_dual_mono(k: u32, m: &Monomial) -> Polynomial {
    let Some((g, rest)) = m.split_first() else {
        return if k == 0 { Polynomial::from(m.clone()) } else { Polynomial::zero() };
    };
    let mut out = Polynomial::zero();
    for a in 0..=k.min(g.index()) {
        let i = g.index();
        if !lucas_binom(u64::from(i - a), u64::from(a)) || i < 2 * a {
            continue;
        }
        let left = d_poly(i - a);
        out += &left * &sq_dual_mono(k - a, &rest);
    }
    out
}

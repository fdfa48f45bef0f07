//! The operation engine: products, Browder brackets, Kudo-Araki operations
//! and higher BV operators evaluated in an [`AlgebraModel`].
//!
//! Operations on generators come from the model tables; everything else is
//! forced by the structure theorems. Products are split one factor at a time
//! and all lower indices are carried along together, so the Cartan-type sums
//! cost linear rather than exponential work in the monomial length.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{lucas_binom, Family, Generator, Monomial, Polynomial};
use crate::model::{AlgebraModel, BracketRule, PrimitiveRule};
use crate::models::so;
use crate::{Error, Result};

pub fn product(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p * q
}

/// `Q_j p` for `0 ≤ j ≤ n - 1`. `Q_0` is squaring, lower `Q_j` are
/// additive and `Q_{n-1}` picks up the pairwise bracket defect.
pub fn q_lower(j: u32, p: &Polynomial, m: &AlgebraModel) -> Result<Polynomial> {
    m.disks.check("Q", j)?;
    if j == 0 {
        return Ok(p.square());
    }
    let terms: Vec<&Monomial> = p.terms().collect();
    let mut out = Polynomial::zero();
    for t in &terms {
        out += q_all(j, t, m)?.swap_remove(j as usize);
    }
    if m.disks.is_top(j) {
        for (k, a) in terms.iter().enumerate() {
            for b in &terms[k + 1..] {
                out += bracket_mono(a, b, m)?;
            }
        }
    }
    Ok(out)
}

/// Upper-indexed operation `Q^i p = Q_{i-|p|} p`, zero below the degree.
pub fn q_upper(i: u32, p: &Polynomial, m: &AlgebraModel) -> Result<Polynomial> {
    match p.degree()? {
        None => Ok(Polynomial::zero()),
        Some(d) if i < d => Ok(Polynomial::zero()),
        Some(d) => q_lower(i - d, p, m),
    }
}

/// `Δ_i p`, the action of `d_i ∈ H_*SO(n)`.
pub fn delta(i: u32, p: &Polynomial, m: &AlgebraModel) -> Result<Polynomial> {
    m.disks.check("D", i)?;
    let mut out = Polynomial::zero();
    for t in p.terms() {
        out += delta_all(i, t, m)?.swap_remove(i as usize);
    }
    Ok(out)
}

/// Browder bracket, extended from generators by the Poisson rule.
pub fn bracket(p: &Polynomial, q: &Polynomial, m: &AlgebraModel) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    if matches!(m.brackets, BracketRule::Zero) {
        return Ok(out);
    }
    for a in p.terms() {
        for b in q.terms() {
            out += bracket_mono(a, b, m)?;
        }
    }
    Ok(out)
}

/// Right side of the product formula:
/// `δ_{i,n-1}{x,y} + Σ_{ε+γ=i} Δ_ε x · Δ_γ y`.
pub fn delta_on_product(i: u32, x: &Polynomial, y: &Polynomial, m: &AlgebraModel) -> Result<Polynomial> {
    m.disks.check("D", i)?;
    let mut out = if m.disks.is_top(i) { bracket(x, y, m)? } else { Polynomial::zero() };
    for e in 0..=i {
        out += &delta(e, x, m)? * &delta(i - e, y, m)?;
    }
    Ok(out)
}

/// Right side of the bracket formula: `Σ_{α+ε=i} {Δ_α x, Δ_ε y}`.
pub fn delta_on_bracket(i: u32, x: &Polynomial, y: &Polynomial, m: &AlgebraModel) -> Result<Polynomial> {
    m.disks.check("D", i)?;
    let mut out = Polynomial::zero();
    for a in 0..=i {
        out += bracket(&delta(a, x, m)?, &delta(i - a, y, m)?, m)?;
    }
    Ok(out)
}

/// Right side of the higher BV relation for `Δ_i Q_j x`:
/// `Σ_k C(i-k,k) Q_{j+2k-i}(Δ_{i-k} x)` over `0 ≤ j+2k-i ≤ n-1`, plus
/// `δ_{j,n-1} Σ_{α+β=i, α<β} {Δ_α x, Δ_β x}`.
pub fn delta_on_q(i: u32, j: u32, x: &Polynomial, m: &AlgebraModel) -> Result<Polynomial> {
    m.disks.check("D", i)?;
    m.disks.check("Q", j)?;
    x.degree()?;
    let mut out = Polynomial::zero();
    for k in 0..=i {
        if !lucas_binom(u64::from(i - k), u64::from(k)) || j + 2 * k < i {
            continue;
        }
        let q = j + 2 * k - i;
        if m.disks.top().is_some_and(|top| q > top) {
            continue;
        }
        out += q_lower(q, &delta(i - k, x, m)?, m)?;
    }
    if m.disks.is_top(j) {
        for a in 0..=i {
            let b = i - a;
            if a < b {
                out += bracket(&delta(a, x, m)?, &delta(b, x, m)?, m)?;
            }
        }
    }
    Ok(out)
}

/// `Δ_{p_i}`: the action of the primitive of degree `i` in `H_*SO(n)`.
pub fn primitive_delta(i: u32, x: &Polynomial, m: &AlgebraModel) -> Result<Polynomial> {
    if i.is_multiple_of(2) {
        return Err(Error::EvenIndex(i));
    }
    m.disks.check("DP", i)?;
    if m.primitive_rule == PrimitiveRule::ThetaCircle {
        return crate::models::qs0::theta_delta(i, x, m);
    }
    let n = m.disks.top().map_or(i + 1, |t| t + 1);
    let p = so::compute_primitive(i, n);
    let mut out = Polynomial::zero();
    for word in p.terms() {
        let mut v = x.clone();
        for (g, _) in word.factors() {
            v = delta(g.index(), &v, m)?;
        }
        out += v;
    }
    Ok(out)
}

/// The top BV operator, `Δ_{p_{n-1}}` for even `n`.
pub fn bv(x: &Polynomial, m: &AlgebraModel) -> Result<Polynomial> {
    match m.disks.top() {
        Some(top) if top % 2 == 1 => primitive_delta(top, x, m),
        _ => Err(Error::IndexOutOfRange { op: "BV", index: m.disks.top().unwrap_or(0), n: m.disks.n() }),
    }
}

/// `BV(xy) + BV(x)y + xBV(y)`, the bracket recovered as the failure of BV to
/// be a derivation.
pub fn bracket_via_bv_defect(x: &Polynomial, y: &Polynomial, m: &AlgebraModel) -> Result<Polynomial> {
    bracket_via_bv_defect_with(x, y, |p| bv(p, m))
}

/// Same as [`bracket_via_bv_defect`] with a caller-supplied BV operator,
/// e.g. a closed form.
pub fn bracket_via_bv_defect_with<F>(x: &Polynomial, y: &Polynomial, mut bv: F) -> Result<Polynomial>
where
    F: FnMut(&Polynomial) -> Result<Polynomial>,
{
    let mut out = bv(&(x * y))?;
    out += &bv(x)? * y;
    out += x * &bv(y)?;
    Ok(out)
}

/// `{x, Q_1 y}` rewritten as `{{x, y}, y}`; only meaningful for `n = 2`.
pub fn bracket_with_q1(x: &Polynomial, y: &Polynomial, m: &AlgebraModel) -> Result<Polynomial> {
    if m.disks.top() != Some(1) {
        return Err(Error::IndexOutOfRange { op: "bracket_with_q1", index: 1, n: m.disks.n() });
    }
    bracket(&bracket(x, y, m)?, y, m)
}

/// `[Q_0 t, …, Q_jmax t]` for one monomial.
fn q_all(jmax: u32, t: &Monomial, m: &AlgebraModel) -> Result<Vec<Polynomial>> {
    let len = jmax as usize + 1;
    if t.is_one() {
        let mut v = vec![Polynomial::zero(); len];
        v[0] = Polynomial::one();
        return Ok(v);
    }
    let Some((g, rest)) = t.split_first() else {
        return component_q_all(jmax, t.component(), m);
    };
    let mut gq = Vec::with_capacity(len);
    for j in 0..=jmax {
        gq.push(q_gen(j, &g, m)?);
    }
    let rq = q_all(jmax, &rest, m)?;
    let mut out = vec![Polynomial::zero(); len];
    for (j, slot) in out.iter_mut().enumerate() {
        for a in 0..=j {
            if !gq[a].is_zero() && !rq[j - a].is_zero() {
                *slot += &gq[a] * &rq[j - a];
            }
        }
        if m.disks.is_top(j as u32) && !matches!(m.brackets, BracketRule::Zero) {
            let gm = Monomial::generator(g.clone());
            let br = bracket_mono(&gm, &rest, m)?;
            *slot += &(&Polynomial::from(gm) * &br) * &Polynomial::from(rest.clone());
        }
    }
    Ok(out)
}

fn q_gen(j: u32, g: &Generator, m: &AlgebraModel) -> Result<Polynomial> {
    if j == 0 {
        return Ok(Polynomial::generator(g.clone()).square());
    }
    if let Some(v) = m.q_entry(j, g) {
        return Ok(v.clone());
    }
    match g.family() {
        Family::Spherical => {
            let mut idx = Vec::with_capacity(g.indices().len() + 1);
            idx.push(g.index());
            idx.push(j + g.degree());
            idx.extend_from_slice(&g.indices()[1..]);
            Ok(Polynomial::generator(Generator::new(Family::Spherical, idx, 2 * g.degree() + j)))
        }
        Family::Formal => {
            let idx = vec![j, g.index()];
            Ok(Polynomial::generator(Generator::new(Family::FormalQ, idx, 2 * g.degree() + j)))
        }
        _ => Err(Error::MissingActionTable { op: "Q", index: j, generator: g.to_string() }),
    }
}

/// Powers `Q_j [c]` for `j ≤ jmax`, from the table entries `Q_j [1]` by the
/// Cartan formula, inverting `Q_0 [1] = [2]` for negative `c`.
fn component_q_all(jmax: u32, c: i64, m: &AlgebraModel) -> Result<Vec<Polynomial>> {
    let len = jmax as usize + 1;
    let mut one = Vec::with_capacity(len);
    one.push(Polynomial::component_class(2));
    for j in 1..=jmax {
        one.push(component_table(m.component_q_entry(j), "Q", j, c)?);
    }
    let mut v = vec![Polynomial::zero(); len];
    v[0] = Polynomial::one();
    if c > 0 {
        for _ in 0..c {
            v = (0..len).map(|j| (0..=j).map(|a| &v[a] * &one[j - a]).fold(Polynomial::zero(), |s, t| s + t)).collect();
        }
    } else {
        for _ in 0..(-c) {
            let mut w: Vec<Polynomial> = Vec::with_capacity(len);
            for j in 0..len {
                let mut s = v[j].clone();
                for (a, wa) in w.iter().enumerate() {
                    s += wa * &one[j - a];
                }
                w.push(s.shift_component(-2));
            }
            v = w;
        }
    }
    Ok(v)
}

fn component_table(entry: Option<&Polynomial>, op: &'static str, index: u32, c: i64) -> Result<Polynomial> {
    match entry {
        Some(p) => Ok(p.clone()),
        None if c == 0 => Ok(Polynomial::zero()),
        None => Err(Error::MissingActionTable { op, index, generator: "[1]".to_string() }),
    }
}

/// `[Δ_0 t, …, Δ_imax t]` for one monomial.
fn delta_all(imax: u32, t: &Monomial, m: &AlgebraModel) -> Result<Vec<Polynomial>> {
    let len = imax as usize + 1;
    if t.is_one() {
        let mut v = vec![Polynomial::zero(); len];
        v[0] = Polynomial::one();
        return Ok(v);
    }
    let Some((g, rest)) = t.split_first() else {
        return component_delta_all(imax, t.component(), m);
    };
    let mut gd = Vec::with_capacity(len);
    for i in 0..=imax {
        gd.push(delta_gen(i, &g, m)?);
    }
    let rd = delta_all(imax, &rest, m)?;
    let mut out = vec![Polynomial::zero(); len];
    for (i, slot) in out.iter_mut().enumerate() {
        for e in 0..=i {
            if !gd[e].is_zero() && !rd[i - e].is_zero() {
                *slot += &gd[e] * &rd[i - e];
            }
        }
        if m.disks.is_top(i as u32) {
            *slot += bracket_mono(&Monomial::generator(g.clone()), &rest, m)?;
        }
    }
    Ok(out)
}

fn delta_gen(i: u32, g: &Generator, m: &AlgebraModel) -> Result<Polynomial> {
    if i == 0 {
        return Ok(Polynomial::generator(g.clone()));
    }
    if let Some(v) = m.delta_entry(i, g) {
        return Ok(v.clone());
    }
    if let Some((j, h)) = m.provenance(g) {
        return delta_on_q(i, *j, &Polynomial::generator(h.clone()), m);
    }
    match g.family() {
        Family::Formal => {
            let mask = g.index();
            if mask & (1 << i) != 0 {
                return Ok(Polynomial::zero());
            }
            Ok(Polynomial::generator(formal_generator(mask | (1 << i), g.degree() - degree_of_mask(mask))))
        }
        Family::FormalQ => {
            let (k, mask) = (g.indices()[0], g.indices()[1]);
            let base = (g.degree() - k) / 2 - degree_of_mask(mask);
            delta_on_q(i, k, &Polynomial::generator(formal_generator(mask, base)), m)
        }
        Family::FormalBracket => {
            let (a, b) = (g.indices()[0], g.indices()[1]);
            let top = m.disks.top().unwrap_or(0);
            let base = (g.degree() - top - degree_of_mask(a) - degree_of_mask(b)) / 2;
            let x = Polynomial::generator(formal_generator(a, base));
            let y = Polynomial::generator(formal_generator(b, base));
            delta_on_bracket(i, &x, &y, m)
        }
        _ => Err(Error::MissingActionTable { op: "D", index: i, generator: g.to_string() }),
    }
}

/// Total degree `Σ S` of the operator `Δ_S` encoded as a bitmask.
pub fn degree_of_mask(mask: u32) -> u32 {
    (0..32).filter(|b| mask & (1 << b) != 0).sum()
}

/// `Δ_S x` for the formal generator `x` of degree `base`.
pub fn formal_generator(mask: u32, base: u32) -> Generator {
    Generator::new(Family::Formal, vec![mask], base + degree_of_mask(mask))
}

fn component_delta_all(imax: u32, c: i64, m: &AlgebraModel) -> Result<Vec<Polynomial>> {
    let len = imax as usize + 1;
    let mut one = Vec::with_capacity(len);
    one.push(Polynomial::component_class(1));
    for i in 1..=imax {
        one.push(component_table(m.component_delta_entry(i), "D", i, c)?);
    }
    let mut v = vec![Polynomial::zero(); len];
    v[0] = Polynomial::one();
    if c > 0 {
        for _ in 0..c {
            v = (0..len).map(|i| (0..=i).map(|e| &v[e] * &one[i - e]).fold(Polynomial::zero(), |s, t| s + t)).collect();
        }
    } else {
        for _ in 0..(-c) {
            let mut w: Vec<Polynomial> = Vec::with_capacity(len);
            for i in 0..len {
                let mut s = v[i].clone();
                for (e, we) in w.iter().enumerate() {
                    s += we * &one[i - e];
                }
                w.push(s.shift_component(-1));
            }
            v = w;
        }
    }
    Ok(v)
}

/// `{a, b}` on monomials by the Poisson rule in both slots.
fn bracket_mono(a: &Monomial, b: &Monomial, m: &AlgebraModel) -> Result<Polynomial> {
    if matches!(m.brackets, BracketRule::Zero) {
        return Ok(Polynomial::zero());
    }
    let Some((g, a_rest)) = a.split_first() else {
        return Ok(Polynomial::zero());
    };
    // {g a', b} = {g, b} a' + g {a', b}
    let mut out = bracket_gen_mono(&g, b, m)?.mul_monomial(&a_rest);
    let tail = bracket_mono(&a_rest, b, m)?;
    if !tail.is_zero() {
        out += tail.mul_monomial(&Monomial::generator(g));
    }
    Ok(out)
}

fn bracket_gen_mono(g: &Generator, b: &Monomial, m: &AlgebraModel) -> Result<Polynomial> {
    let Some((h, b_rest)) = b.split_first() else {
        return Ok(Polynomial::zero());
    };
    let mut out = bracket_gen(g, &h, m)?.mul_monomial(&b_rest);
    let tail = bracket_gen_mono(g, &b_rest, m)?;
    if !tail.is_zero() {
        out += tail.mul_monomial(&Monomial::generator(h));
    }
    Ok(out)
}

fn bracket_gen(a: &Generator, b: &Generator, m: &AlgebraModel) -> Result<Polynomial> {
    if a == b {
        return Ok(Polynomial::zero());
    }
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    match &m.brackets {
        BracketRule::Zero => Ok(Polynomial::zero()),
        BracketRule::Table(t) => Ok(t.get(&(lo.clone(), hi.clone())).cloned().unwrap_or_default()),
        BracketRule::Formal => {
            if lo.family() != Family::Formal || hi.family() != Family::Formal {
                return Err(Error::UnsupportedShape(alloc::format!("{{{lo},{hi}}}")));
            }
            let top = m.disks.top().unwrap_or(0);
            let idx = vec![lo.index().min(hi.index()), lo.index().max(hi.index())];
            Ok(Polynomial::generator(Generator::new(Family::FormalBracket, idx, lo.degree() + hi.degree() + top)))
        }
    }
}

//! `H_*Ω²S^{k+2}` for `k ≥ 0`, truncated to finitely many generators.

use alloc::format;
use alloc::vec;

use crate::algebra::{Family, Generator, Monomial, Polynomial};
use crate::model::{AlgebraModel, Disks};
use crate::{Error, Result};

/// Where `BV = Δ_1` on the generators `u_n` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BvSource {
    /// Only `BV(u_1)` is stored; `BV(u_n)` for `n ≥ 2` follows from
    /// `u_n = Q_1 u_{n-1}` and the `Δ_1 Q_1` relation.
    Derived,
    /// `BV(u_n)` stored for every `n` (the closed values `u_1^{2^n}` for
    /// `k = 1`, zero for `k ≥ 2`).
    Stored,
}

#[derive(Clone, Debug)]
pub struct LoopModelConfig {
    pub k: u32,
    pub max_index: u32,
    /// Component classes `[c]` for `c` in this range; only legal for `k = 0`.
    pub components: Option<(i64, i64)>,
    pub bv: BvSource,
}

impl LoopModelConfig {
    /// A configuration whose generators reach past degree `2 * max_degree + 1`,
    /// so that `Q_1` of every basis element of degree `≤ max_degree` is defined.
    pub fn for_degree(k: u32, max_degree: u32) -> Self {
        let mut max_index = 1;
        while u_degree(max_index, k) <= 2 * max_degree + 1 {
            max_index += 1;
        }
        let components = (k == 0).then_some((-8, 8));
        LoopModelConfig { k, max_index, components, bv: BvSource::Derived }
    }
}

/// Degree of `u_n`: `2^{n-1}(k+1) - 1`. The `k = 0` model `Ω²S²` uses the
/// degrees of `Ω²S³`, through `Ω²_0 S² ≃ Ω²S³`.
pub fn u_degree(n: u32, k: u32) -> u32 {
    let k = k.max(1);
    (1u32 << (n - 1)) * (k + 1) - 1
}

pub fn u(n: u32, k: u32) -> Generator {
    Generator::new(Family::U, vec![n], u_degree(n, k))
}

pub fn model_name(k: u32) -> alloc::string::String {
    format!("omega2s{}", k + 2)
}

pub fn omega2_sphere_model(cfg: &LoopModelConfig) -> Result<AlgebraModel> {
    if cfg.components.is_some() && cfg.k != 0 {
        return Err(Error::UnsupportedConfig(format!("components require k = 0, got k = {}", cfg.k)));
    }
    if cfg.max_index == 0 {
        return Err(Error::UnsupportedConfig("max generator index must be positive".into()));
    }
    let k = cfg.k;
    let mut m = AlgebraModel::new(model_name(k), Disks::Finite(2));
    for n in 1..=cfg.max_index {
        m.add_generator(u(n, k));
        if n < cfg.max_index {
            m.set_q(1, u(n, k), Polynomial::generator(u(n + 1, k)));
        }
        if n > 1 {
            m.set_provenance(u(n, k), 1, u(n - 1, k));
        }
    }
    let u1 = Polynomial::generator(u(1, k));
    let first = if k <= 1 { u1.square() } else { Polynomial::zero() };
    m.set_delta(1, u(1, k), first);
    if cfg.bv == BvSource::Stored {
        for n in 2..=cfg.max_index {
            let v = if k <= 1 { u1.pow(1 << n) } else { Polynomial::zero() };
            m.set_delta(1, u(n, k), v);
        }
    }
    if k == 0 {
        m.components = cfg.components.or(Some((-8, 8)));
        m.set_component_delta(1, u1.shift_component(1));
        // Forced by Δ_1 Q_1 [1] = {Δ_1[1], [1]} + (Δ_1[1])² = u_1²*[2]: the
        // only degree-1 class in component 2 is u_1*[2].
        m.set_component_q(1, u1.shift_component(2));
    }
    m.validate()?;
    Ok(m)
}

/// The closed BV formula on `H_*Ω²S³`: on `u_{i_1}^{ℓ_1}…u_{i_r}^{ℓ_r}` it is
/// `Σ_j ℓ_j u_1^{2^{i_j}} · (monomial with ℓ_j lowered by one)`.
pub fn bv_closed_form(mono: &Monomial, k: u32) -> Result<Polynomial> {
    if k != 1 {
        return Err(Error::UnsupportedConfig(format!("closed BV form is stated for k = 1, got k = {k}")));
    }
    let mut out = Polynomial::zero();
    for (g, e) in mono.factors() {
        if g.family() != Family::U {
            return Err(Error::UnsupportedShape(format!("{mono}")));
        }
        if e % 2 == 0 {
            continue;
        }
        let rest = Monomial::from_factors(
            mono.factors().iter().map(|(h, f)| (h.clone(), if h == g { f - 1 } else { *f })),
            mono.component(),
        )
        .expect("no exterior generators");
        let lead = Polynomial::generator(u(1, 1)).pow(1 << g.index());
        out += lead.mul_monomial(&rest);
    }
    Ok(out)
}

/// `BV([i] * f) = BV([i]) * f + [i] * BV(f)` with `BV([i]) = (i mod 2) u_1 * [i]`
/// and `BV(f)` the closed form on the component-0 polynomial `f`.
pub fn bv_omega2_s2(i: i64, f: &Polynomial) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    if i.rem_euclid(2) == 1 {
        out += (&Polynomial::generator(u(1, 0)) * f).shift_component(i);
    }
    for t in f.terms() {
        out += bv_closed_form(&t.positive_part(), 1)?.shift_component(i + t.component());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(parts: &[(u32, u32)]) -> Monomial {
        Monomial::from_factors(parts.iter().map(|(n, e)| (u(*n, 1), *e)), 0).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        let got = bv_closed_form(&mono(&[(1, 1), (2, 1), (3, 1)]), 1).unwrap();
        let want: Polynomial = [mono(&[(1, 2), (2, 1), (3, 1)]), mono(&[(1, 5), (3, 1)]), mono(&[(1, 9), (2, 1)])]
            .into_iter()
            .collect();
        assert_eq!(got, want);
        assert!(bv_closed_form(&mono(&[(1, 2)]), 1).unwrap().is_zero());
        assert_eq!(bv_closed_form(&mono(&[(2, 1)]), 1).unwrap(), Polynomial::from(mono(&[(1, 4)])));
    }

    #[test]
    fn component_bv() {
        let one = Polynomial::one();
        assert_eq!(bv_omega2_s2(3, &one).unwrap(), Polynomial::generator(u(1, 0)).shift_component(3));
        assert!(bv_omega2_s2(2, &one).unwrap().is_zero());
        assert!(bv_omega2_s2(1, &Polynomial::generator(u(1, 0))).unwrap().is_zero());
    }

    #[test]
    fn degrees() {
        assert_eq!(u_degree(3, 1), 7);
        assert_eq!(u_degree(2, 2), 5);
        assert_eq!(u_degree(2, 0), 3);
    }
}

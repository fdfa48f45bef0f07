//! A finite fragment of `H_*QS⁰`: Q-words on `[1]` moved to component 0,
//! the Θ-image classes `θ_3`, `θ_7`, and the component classes.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Family, Generator, Polynomial};
use crate::model::{AlgebraModel, Disks, PrimitiveRule};
use crate::ops;
use crate::{Error, Result};

/// Degrees of the Hopf classes, the only ones with nonzero Θ-image.
pub const HOPF_DEGREES: [u32; 3] = [1, 3, 7];

#[derive(Clone, Debug)]
pub struct QS0FragmentConfig {
    pub components: (i64, i64),
    /// Longest Q-word `Q^{i_1}…Q^{i_r}[1]` in the generator table.
    pub depth: u32,
    /// Largest generator degree in the table.
    pub max_degree: u32,
}

impl Default for QS0FragmentConfig {
    fn default() -> Self {
        QS0FragmentConfig { components: (-8, 8), depth: 3, max_degree: 16 }
    }
}

/// Upper-index sequences `I = (i_1, …, i_r)` with `i_r ≥ 1` and
/// `i_k > i_{k+1} + … + i_r` (each operation above the unstable range),
/// of total degree at most `max_degree` and length at most `depth`.
pub fn q_words(max_degree: u32, depth: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u32>> = (1..=max_degree).map(|i| vec![i]).collect();
    while let Some(w) = stack.pop() {
        let total: u32 = w.iter().sum();
        if (w.len() as u32) < depth {
            for i in (total + 1)..=(max_degree - total.min(max_degree)) {
                let mut next = vec![i];
                next.extend_from_slice(&w);
                stack.push(next);
            }
        }
        out.push(w);
    }
    out.sort_by(|a, b| a.iter().sum::<u32>().cmp(&b.iter().sum()).then_with(|| a.cmp(b)));
    out
}

/// `Q^I[1] * [-2^r]`, checked against the depth bound.
pub fn q_word(word: &[u32], depth: u32) -> Result<Generator> {
    if word.len() as u32 > depth {
        return Err(Error::DepthExceeded { depth: word.len(), bound: depth as usize });
    }
    Ok(Generator::new(Family::QWord, word.to_vec(), word.iter().sum()))
}

/// `θ_d * [-1]`.
pub fn theta(d: u32) -> Generator {
    Generator::new(Family::Theta, vec![d], d)
}

/// The Hurewicz image of the Hopf class of degree `d` in component 0:
/// `Q^1[1] * [-2]` for `d = 1`, `θ_d * [-1]` for `d ∈ {3, 7}`.
pub fn hopf_class(d: u32) -> Result<Polynomial> {
    match d {
        1 => Ok(Polynomial::generator(Generator::new(Family::QWord, vec![1], 1))),
        3 | 7 => Ok(Polynomial::generator(theta(d))),
        _ => Err(Error::UnsupportedShape(format!("no Hopf class in degree {d}"))),
    }
}

pub fn qs0_fragment(cfg: &QS0FragmentConfig) -> Result<AlgebraModel> {
    if cfg.depth == 0 || cfg.components.0 > cfg.components.1 {
        return Err(Error::UnsupportedConfig(format!("{cfg:?}")));
    }
    let mut m = AlgebraModel::new("qs0", Disks::Stable);
    for w in q_words(cfg.max_degree, cfg.depth) {
        m.add_generator(q_word(&w, cfg.depth)?);
    }
    for d in [3, 7] {
        m.add_generator(theta(d));
    }
    for j in 1..=cfg.max_degree {
        // Q_j [1] = Q^j [1] = q_j * [2].
        m.set_component_q(j, Polynomial::generator(q_word(&[j], cfg.depth)?).shift_component(2));
    }
    m.components = Some(cfg.components);
    m.primitive_rule = PrimitiveRule::ThetaCircle;
    m.validate()?;
    Ok(m)
}

/// `Δ_{p_d} x = x ∘ θ_d`, a derivation of the Pontryagin product (the
/// fragment is stable, so no bracket term), determined on generators by
/// `[1] ∘ θ_d = θ_d`, `θ_d ∘ θ_d = 0`, and `Q^I[1] ∘ θ_d = Q^I(θ_d)` for the
/// spherical class `θ_d` (positive dual Steenrod operations vanish on it).
pub fn theta_delta(d: u32, x: &Polynomial, m: &AlgebraModel) -> Result<Polynomial> {
    if !HOPF_DEGREES.contains(&d) {
        return Err(Error::UnsupportedShape(format!("DP{d} outside the Θ-image")));
    }
    let h = hopf_class(d)?;
    let mut out = Polynomial::zero();
    for t in x.terms() {
        let c = t.component();
        if c.rem_euclid(2) == 1 {
            out += h.mul_monomial(t);
        }
        for (g, e) in t.factors() {
            if e % 2 == 0 {
                continue;
            }
            let rest = crate::algebra::Monomial::from_factors(
                t.factors().iter().map(|(f, k)| (f.clone(), if f == g { k - 1 } else { *k })),
                c,
            )
            .expect("no exterior generators");
            out += theta_delta_gen(d, g, &h, m)?.mul_monomial(&rest);
        }
    }
    Ok(out)
}

fn theta_delta_gen(d: u32, g: &Generator, h: &Polynomial, m: &AlgebraModel) -> Result<Polynomial> {
    match g.family() {
        // (θ_d * [-1]) ∘ θ_d = (θ_d ∘ θ_d) * [-1] + θ_d * (θ_d ∘ [-1]) = θ_d * θ_d * [-2].
        Family::Theta if g.index() == d => Ok(h.square()),
        Family::QWord => {
            let mut v = h.shift_component(1);
            for i in g.indices().iter().rev() {
                v = ops::q_upper(*i, &v, m)?;
            }
            Ok(v.shift_component(-(1i64 << g.indices().len())))
        }
        _ => Err(Error::UnsupportedShape(format!("{g} ∘ θ_{d}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_enumeration() {
        let w = q_words(4, 3);
        assert!(w.contains(&vec![1]));
        assert!(w.contains(&vec![2, 1]));
        assert!(w.contains(&vec![3, 1]));
        assert!(!w.contains(&vec![1, 1]));
        assert!(w.iter().all(|x| x.iter().sum::<u32>() <= 4));
    }

    #[test]
    fn depth_bound() {
        assert!(matches!(q_word(&[4, 2, 1], 2), Err(Error::DepthExceeded { .. })));
    }
}

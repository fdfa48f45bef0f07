//! Formal models: one generator `x` with formal classes `Δ_S x`, `Q_k Δ_S x`
//! and `{Δ_S x, Δ_T x}`, used to compare the higher BV relation with the
//! chain-level computation without any accidental cancellation.

use alloc::format;

use crate::algebra::Polynomial;
use crate::model::{AlgebraModel, BracketRule, Disks};
use crate::ops::formal_generator;

/// The formal `fD_n` model on a generator `x0` of degree `base`.
pub fn formal_model(n: u32, base: u32) -> AlgebraModel {
    let mut m = AlgebraModel::new(format!("formal({n})"), Disks::Finite(n));
    m.add_generator(formal_generator(0, base));
    m.brackets = BracketRule::Formal;
    m
}

/// The stable counterpart: every index legal, brackets zero.
pub fn stable_formal_model(base: u32) -> AlgebraModel {
    let mut m = AlgebraModel::new("stable-formal", Disks::Stable);
    m.add_generator(formal_generator(0, base));
    m
}

/// `x0` as a polynomial.
pub fn formal_x(base: u32) -> Polynomial {
    Polynomial::generator(formal_generator(0, base))
}

//! Cellular models: the equivariant sphere `W_n`, the cells of `SO(n)`, and
//! the cellular action of `SO(n)` on `S^{n-1}`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::complex::ChainComplex;
use crate::linalg::{BitVec, Gf2Matrix};
use crate::models::so;

/// A cell of `W_n`: `e^k` or `Te^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SphereCell {
    pub k: u32,
    pub twisted: bool,
}

impl SphereCell {
    pub fn e(k: u32) -> Self {
        SphereCell { k, twisted: false }
    }

    pub fn te(k: u32) -> Self {
        SphereCell { k, twisted: true }
    }

    /// Position inside its degree: `e^k` first, then `Te^k`.
    pub fn slot(self) -> usize {
        usize::from(self.twisted)
    }
}

/// `W_n`: cells `e^i, Te^i` for `0 ≤ i ≤ n`, `d e^i = e^{i-1} + Te^{i-1}`,
/// `T` exchanging the two cells of each degree.
pub fn build_wn(n: u32) -> ChainComplex {
    let labels = (0..=n).map(|i| vec![format!("e^{i}"), format!("Te^{i}")]).collect();
    let mut c = ChainComplex::zero_differential(labels);
    for i in 1..=n as usize {
        let both = BitVec::from_indices(2, [0, 1]);
        c.d[i] = Gf2Matrix::from_columns(2, vec![both.clone(), both]);
    }
    let swap = Gf2Matrix::from_columns(2, vec![BitVec::unit(2, 1), BitVec::unit(2, 0)]);
    c.t = Some(vec![swap; n as usize + 1]);
    c
}

/// `W_n / (Z/2)`, the cellular chains of `RP^n`: one cell per degree and
/// zero differential mod 2.
pub fn wn_quotient(n: u32) -> ChainComplex {
    ChainComplex::zero_differential((0..=n).map(|i| vec![format!("e^{i}")]).collect())
}

/// Cellular chains of `SO(n)`: the exterior algebra on `d^1, …, d^{n-1}`
/// with zero differential. Cells are indexed by bitmasks.
#[derive(Clone, Debug)]
pub struct SoCells {
    pub n: u32,
    pub complex: ChainComplex,
    /// `masks[k]` lists the cells of degree `k`.
    pub masks: Vec<Vec<u32>>,
}

pub fn build_so_cells(n: u32) -> SoCells {
    let top = n * (n - 1) / 2;
    let mut masks: Vec<Vec<u32>> = vec![Vec::new(); top as usize + 1];
    for mask in (0u32..(1 << n)).filter(|m| m & 1 == 0) {
        masks[crate::ops::degree_of_mask(mask) as usize].push(mask);
    }
    let labels = masks.iter().map(|ms| ms.iter().map(|m| cell_label(*m)).collect()).collect();
    SoCells { n, complex: ChainComplex::zero_differential(labels), masks }
}

pub fn cell_label(mask: u32) -> String {
    if mask == 0 {
        return "1".to_string();
    }
    let parts: Vec<String> = (1..32).rev().filter(|i| mask & (1 << i) != 0).map(|i| format!("d^{i}")).collect();
    parts.join("")
}

impl SoCells {
    /// Cellular diagonal of a cell as pairs of cells, from the Cartan
    /// diagonal on generators.
    pub fn diagonal(&self, mask: u32) -> Vec<(u32, u32)> {
        so::diagonal(&so::exterior_monomial(mask))
            .into_iter()
            .map(|(a, b)| (mask_of(&a), mask_of(&b)))
            .collect()
    }
}

pub fn mask_of(m: &crate::algebra::Monomial) -> u32 {
    m.factors().iter().fold(0, |acc, (g, _)| acc | (1 << g.index()))
}

/// Which reading of the cellular action lemma to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaVariant {
    /// `d^i . e^0 = e^i + Te^i` for `i > 0`, as established in the proof.
    Proof,
    /// `d^i . e^j = 0` for all `i > 0`, as literally stated.
    Literal,
}

/// `d^S . c` for a cell `c` of `W_{n-1}`, as a list of cells. Decomposable
/// cells act by zero; `d^0 = 1` acts as the identity.
pub fn so_act(variant: LemmaVariant, mask: u32, c: SphereCell) -> Vec<SphereCell> {
    if mask == 0 {
        return vec![c];
    }
    if variant == LemmaVariant::Literal || mask.count_ones() > 1 || c.k > 0 {
        return Vec::new();
    }
    let i = mask.trailing_zeros();
    vec![SphereCell::e(i), SphereCell::te(i)]
}

/// Checks that the pairing `C(SO(n)) ⊗ W_{n-1} → W_{n-1}` commutes with
/// the differentials and with `T`.
pub fn so_action_is_chain_map(n: u32, variant: LemmaVariant) -> bool {
    let so = build_so_cells(n);
    for ms in &so.masks {
        for &mask in ms {
            for k in 0..n {
                for tw in [false, true] {
                    let c = SphereCell { k, twisted: tw };
                    // d(s.c) = s.(dc), zero differential on SO(n)
                    let lhs = boundary(&so_act(variant, mask, c));
                    let dc = boundary(&[c]);
                    let rhs: Vec<SphereCell> = dc.iter().flat_map(|x| so_act(variant, mask, *x)).collect();
                    if normalize(lhs) != normalize(rhs) {
                        return false;
                    }
                    let tl: Vec<SphereCell> = so_act(variant, mask, c).into_iter().map(flip).collect();
                    let tr = so_act(variant, mask, flip(c));
                    if normalize(tl) != normalize(tr) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `d^{n-1} . e^0` represents the top class of `S^{n-1}`, i.e. equals
/// `e^{n-1} + Te^{n-1}`.
pub fn top_class_hit(n: u32, variant: LemmaVariant) -> bool {
    let got = normalize(so_act(variant, 1 << (n - 1), SphereCell::e(0)));
    got == normalize(vec![SphereCell::e(n - 1), SphereCell::te(n - 1)])
}

fn flip(c: SphereCell) -> SphereCell {
    SphereCell { k: c.k, twisted: !c.twisted }
}

fn boundary(cells: &[SphereCell]) -> Vec<SphereCell> {
    cells.iter().filter(|c| c.k > 0).flat_map(|c| [SphereCell::e(c.k - 1), SphereCell::te(c.k - 1)]).collect()
}

/// Cancels pairs mod 2 and sorts.
pub fn normalize(mut cells: Vec<SphereCell>) -> Vec<SphereCell> {
    cells.sort();
    let mut out: Vec<SphereCell> = Vec::new();
    for c in cells {
        if out.last() == Some(&c) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out
}

//! Model descriptors: a truncated algebra together with the action tables
//! the operation engine consults.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{Generator, Monomial, Polynomial};
use crate::{Error, Result};

/// Dimension of the little disks: `Finite(n)` for `fD_n`, or the stable
/// (infinite loop space) case where every index is legal and brackets vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Disks {
    Finite(u32),
    Stable,
}

impl Disks {
    /// Largest legal `Q`/`Δ` index, `n - 1`.
    pub fn top(self) -> Option<u32> {
        match self {
            Disks::Finite(n) => Some(n - 1),
            Disks::Stable => None,
        }
    }

    pub fn is_stable(self) -> bool {
        matches!(self, Disks::Stable)
    }

    /// Value of `n` used in error messages; 0 in the stable case.
    pub fn n(self) -> u32 {
        match self {
            Disks::Finite(n) => n,
            Disks::Stable => 0,
        }
    }

    pub fn check(self, op: &'static str, index: u32) -> Result<()> {
        match self.top() {
            Some(top) if index > top => Err(Error::IndexOutOfRange { op, index, n: self.n() }),
            _ => Ok(()),
        }
    }

    pub fn is_top(self, index: u32) -> bool {
        self.top() == Some(index)
    }
}

/// How Browder brackets of two generators are obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketRule {
    /// All brackets vanish.
    Zero,
    /// Lookup on unordered generator pairs; absent pairs are zero.
    Table(BTreeMap<(Generator, Generator), Polynomial>),
    /// Formal bracket symbols between `Formal`-family generators.
    Formal,
}

/// How `Δ_{p_i}` is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimitiveRule {
    /// Expand the primitive `p_i ∈ H_*SO(n)` into exterior monomials and
    /// compose the corresponding `Δ_j`.
    Composite,
    /// Circle product with the Θ-image class (the `H_*QS⁰` fragment).
    ThetaCircle,
}

#[derive(Clone, Debug)]
pub struct AlgebraModel {
    pub name: String,
    pub disks: Disks,
    generators: BTreeMap<String, Generator>,
    q_table: BTreeMap<(u32, Generator), Polynomial>,
    delta_table: BTreeMap<(u32, Generator), Polynomial>,
    provenance: BTreeMap<Generator, (u32, Generator)>,
    component_q: BTreeMap<u32, Polynomial>,
    component_delta: BTreeMap<u32, Polynomial>,
    pub brackets: BracketRule,
    pub components: Option<(i64, i64)>,
    pub formal: bool,
    pub primitive_rule: PrimitiveRule,
}

impl AlgebraModel {
    pub fn new(name: impl Into<String>, disks: Disks) -> Self {
        AlgebraModel {
            name: name.into(),
            disks,
            generators: BTreeMap::new(),
            q_table: BTreeMap::new(),
            delta_table: BTreeMap::new(),
            provenance: BTreeMap::new(),
            component_q: BTreeMap::new(),
            component_delta: BTreeMap::new(),
            brackets: BracketRule::Zero,
            components: None,
            formal: false,
            primitive_rule: PrimitiveRule::Composite,
        }
    }

    pub fn add_generator(&mut self, g: Generator) {
        self.generators.insert(g.to_string(), g);
    }

    pub fn set_q(&mut self, j: u32, g: Generator, value: Polynomial) {
        self.q_table.insert((j, g), value);
    }

    pub fn set_delta(&mut self, i: u32, g: Generator, value: Polynomial) {
        self.delta_table.insert((i, g), value);
    }

    pub fn clear_delta(&mut self, i: u32, g: &Generator) {
        self.delta_table.remove(&(i, g.clone()));
    }

    /// Records `g = Q_j(source)`; used to derive `Δ_i g` through the
    /// `Δ_i Q_j` relation when no table entry exists.
    pub fn set_provenance(&mut self, g: Generator, j: u32, source: Generator) {
        self.provenance.insert(g, (j, source));
    }

    pub fn set_component_q(&mut self, j: u32, value: Polynomial) {
        self.component_q.insert(j, value);
    }

    pub fn set_component_delta(&mut self, i: u32, value: Polynomial) {
        self.component_delta.insert(i, value);
    }

    pub fn lookup(&self, name: &str) -> Result<&Generator> {
        self.generators.get(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn generators(&self) -> impl Iterator<Item = &Generator> + '_ {
        self.generators.values()
    }

    pub fn q_entry(&self, j: u32, g: &Generator) -> Option<&Polynomial> {
        self.q_table.get(&(j, g.clone()))
    }

    pub fn delta_entry(&self, i: u32, g: &Generator) -> Option<&Polynomial> {
        self.delta_table.get(&(i, g.clone()))
    }

    pub fn provenance(&self, g: &Generator) -> Option<&(u32, Generator)> {
        self.provenance.get(g)
    }

    pub fn component_q_entry(&self, j: u32) -> Option<&Polynomial> {
        self.component_q.get(&j)
    }

    pub fn component_delta_entry(&self, i: u32) -> Option<&Polynomial> {
        self.component_delta.get(&i)
    }

    pub fn has_components(&self) -> bool {
        self.components.is_some()
    }

    /// Checks the degree bookkeeping of every table entry:
    /// `|Q_j x| = 2|x| + j`, `|Δ_i x| = |x| + i`, `|{x,y}| = |x| + |y| + n - 1`,
    /// and that the bracket table is zero on the diagonal.
    pub fn validate(&self) -> Result<()> {
        for ((j, g), v) in &self.q_table {
            expect_degree(v, 2 * g.degree() + j)?;
        }
        for ((i, g), v) in &self.delta_table {
            expect_degree(v, g.degree() + i)?;
        }
        for (j, v) in &self.component_q {
            expect_degree(v, *j)?;
        }
        for (i, v) in &self.component_delta {
            expect_degree(v, *i)?;
        }
        if let (BracketRule::Table(t), Some(top)) = (&self.brackets, self.disks.top()) {
            for ((a, b), v) in t {
                if a == b && !v.is_zero() {
                    return Err(Error::UnsupportedConfig(alloc::format!("{{{a},{a}}} ≠ 0")));
                }
                expect_degree(v, a.degree() + b.degree() + top)?;
            }
        }
        Ok(())
    }

    /// Every monomial in the generators of degree at most `max_degree`, times
    /// each component class in range. Sorted by degree, then canonically.
    pub fn basis(&self, max_degree: u32) -> Vec<Monomial> {
        let gens: Vec<&Generator> =
            self.generators.values().filter(|g| g.degree() > 0 && g.degree() <= max_degree).collect();
        let mut out = Vec::new();
        enumerate(&gens, 0, Monomial::one(), max_degree, &mut out);
        if let Some((lo, hi)) = self.components {
            let positive = core::mem::take(&mut out);
            for c in lo..=hi {
                out.extend(positive.iter().map(|m| m.with_component(c)));
            }
        }
        out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        out
    }
}

fn expect_degree(p: &Polynomial, d: u32) -> Result<()> {
    match p.degree()? {
        None => Ok(()),
        Some(e) if e == d => Ok(()),
        Some(_) => Err(Error::InhomogeneousPolynomial),
    }
}

fn enumerate(gens: &[&Generator], from: usize, acc: Monomial, budget: u32, out: &mut Vec<Monomial>) {
    out.push(acc.clone());
    for k in from..gens.len() {
        let g = gens[k];
        let used = acc.degree();
        if used + g.degree() > budget {
            continue;
        }
        if g.is_exterior() && acc.exponent(g) > 0 {
            continue;
        }
        if let Some(next) = acc.mul(&Monomial::generator(g.clone())) {
            // Allow repeats of polynomial generators by staying at `k`.
            let next_from = if g.is_exterior() { k + 1 } else { k };
            enumerate(gens, next_from, next, budget, out);
        }
    }
}

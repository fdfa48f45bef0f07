use alloc::vec::Vec;
use core::fmt;

use super::Generator;

/// A product of generator powers times a component class `[c]`.
///
/// Factors are kept sorted by generator with positive exponents, and an
/// exterior generator never carries an exponent above 1: such products are
/// zero and are rejected at construction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    factors: Vec<(Generator, u32)>,
    component: i64,
}

impl Monomial {
    /// The empty monomial `1 = [0]`.
    pub fn one() -> Self {
        Monomial { factors: Vec::new(), component: 0 }
    }

    pub fn generator(g: Generator) -> Self {
        Monomial { factors: alloc::vec![(g, 1)], component: 0 }
    }

    pub fn component_class(c: i64) -> Self {
        Monomial { factors: Vec::new(), component: c }
    }

    /// Builds a monomial from arbitrary (generator, exponent) pairs, merging
    /// repeats. Returns `None` if the product vanishes.
    pub fn from_factors<I>(factors: I, component: i64) -> Option<Self>
    where
        I: IntoIterator<Item = (Generator, u32)>,
    {
        let mut m = Monomial::component_class(component);
        for (g, e) in factors {
            if e == 0 {
                continue;
            }
            m = m.mul(&Monomial { factors: alloc::vec![(g, e)], component: 0 })?;
        }
        Some(m)
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.factors
    }

    pub fn component(&self) -> i64 {
        self.component
    }

    pub fn with_component(&self, component: i64) -> Self {
        Monomial { factors: self.factors.clone(), component }
    }

    /// Same factors, component set to 0.
    pub fn positive_part(&self) -> Self {
        self.with_component(0)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty() && self.component == 0
    }

    pub fn exponent(&self, g: &Generator) -> u32 {
        self.factors
            .binary_search_by(|(h, _)| h.cmp(g))
            .map(|k| self.factors[k].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(g, e)| g.degree() * e).sum()
    }

    /// Number of positive-degree factors counted with multiplicity.
    pub fn length(&self) -> u32 {
        self.factors.iter().filter(|(g, _)| g.degree() > 0).map(|(_, e)| e).sum()
    }

    /// Product, or `None` when an exterior generator would be squared.
    pub fn mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut a, mut b) = (self.factors.iter().peekable(), other.factors.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ga, ea)), Some((gb, eb))) => match ga.cmp(gb) {
                    core::cmp::Ordering::Less => {
                        out.push((ga.clone(), *ea));
                        a.next();
                    }
                    core::cmp::Ordering::Greater => {
                        out.push((gb.clone(), *eb));
                        b.next();
                    }
                    core::cmp::Ordering::Equal => {
                        if ga.is_exterior() {
                            return None;
                        }
                        out.push((ga.clone(), ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(x), None) => {
                    out.push((*x).clone());
                    a.next();
                }
                (None, Some(y)) => {
                    out.push((*y).clone());
                    b.next();
                }
                (None, None) => break,
            }
        }
        Some(Monomial { factors: out, component: self.component + other.component })
    }

    /// Splits off one factor of the first generator: `self = g * rest`.
    /// Returns `None` for a pure component class.
    pub fn split_first(&self) -> Option<(Generator, Monomial)> {
        let (g, e) = self.factors.first()?;
        let mut rest = self.clone();
        if *e == 1 {
            rest.factors.remove(0);
        } else {
            rest.factors[0].1 -= 1;
        }
        Some((g.clone(), rest))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (g, e) in &self.factors {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{g}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if self.component != 0 {
            if !first {
                f.write_str("*")?;
            }
            write!(f, "[{}]", self.component)?;
        }
        Ok(())
    }
}

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul};

use super::{Generator, Monomial};
use crate::{Error, Result};

/// A finite F₂-linear combination of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polynomial {
    terms: BTreeSet<Monomial>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Monomial::one().into()
    }

    pub fn generator(g: Generator) -> Self {
        Monomial::generator(g).into()
    }

    pub fn component_class(c: i64) -> Self {
        Monomial::component_class(c).into()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Adds a single monomial (toggles its presence).
    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    /// Common degree of the terms; `None` for zero.
    pub fn degree(&self) -> Result<Option<u32>> {
        let mut it = self.terms.iter().map(Monomial::degree);
        let Some(d) = it.next() else { return Ok(None) };
        if it.all(|e| e == d) {
            Ok(Some(d))
        } else {
            Err(Error::InhomogeneousPolynomial)
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        self.terms.iter().filter_map(|t| t.mul(m)).collect()
    }

    /// Multiplies every term by the component class `[c]`.
    pub fn shift_component(&self, c: i64) -> Polynomial {
        self.mul_monomial(&Monomial::component_class(c))
    }

    /// Linear extension of a fallible map on monomials.
    pub fn try_map_terms<F>(&self, mut f: F) -> Result<Polynomial>
    where
        F: FnMut(&Monomial) -> Result<Polynomial>,
    {
        let mut acc = Polynomial::zero();
        for t in &self.terms {
            acc += f(t)?;
        }
        Ok(acc)
    }

    pub fn into_terms(self) -> Vec<Monomial> {
        self.terms.into_iter().collect()
    }

    pub fn square(&self) -> Polynomial {
        self * self
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        Polynomial { terms }
    }
}

impl FromIterator<Monomial> for Polynomial {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for m in iter {
            p.toggle(m);
        }
        p
    }
}

impl AddAssign<Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        for m in rhs.terms {
            self.toggle(m);
        }
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for m in &rhs.terms {
            self.toggle(m.clone());
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += rhs;
        self
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for a in &self.terms {
            for b in &rhs.terms {
                if let Some(m) = a.mul(b) {
                    out.toggle(m);
                }
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, m) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Family;
    use alloc::string::ToString;
    use alloc::vec;

    fn u(n: u32) -> Polynomial {
        Polynomial::generator(Generator::new(Family::U, vec![n], (1 << n) - 1))
    }

    fn d(i: u32) -> Polynomial {
        Polynomial::generator(Generator::new(Family::D, vec![i], i))
    }

    #[test]
    fn exponent_addition() {
        let lhs = &u(1).square() * &(&u(1) * &u(2));
        assert_eq!(lhs.to_string(), "u1^3*u2");
    }

    #[test]
    fn exterior_square_vanishes() {
        assert!((&d(1) * &d(1)).is_zero());
        assert_eq!(&(&d(1) + &d(2)) * &d(1), &d(1) * &d(2));
    }

    #[test]
    fn unit_and_zero() {
        let x = &u(1) * &u(3);
        assert_eq!(&x * &Polynomial::one(), x);
        assert!((&x * &Polynomial::zero()).is_zero());
        assert!((&x + &x).is_zero());
        assert_eq!(&x + &Polynomial::zero(), x);
    }

    #[test]
    fn addition_is_disjoint_union() {
        assert_eq!((&u(1) + &u(2)).len(), 2);
        let p = &(&u(1) + &u(2)) * &u(1);
        assert_eq!(p, &u(1).square() + &(&u(1) * &u(2)));
    }

    #[test]
    fn degrees() {
        assert_eq!(u(1).square().degree(), Ok(Some(2)));
        assert_eq!(Polynomial::zero().degree(), Ok(None));
        assert_eq!((&u(1) + &u(2)).degree(), Err(Error::InhomogeneousPolynomial));
    }

    #[test]
    fn rendering_with_component() {
        let p = &(&u(1).square() * &u(2)) * &Polynomial::component_class(-1);
        assert_eq!(p.to_string(), "u1^2*u2*[-1]");
        assert_eq!(Polynomial::component_class(3).to_string(), "[3]");
        assert_eq!(Polynomial::one().to_string(), "1");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn components_add() {
        let p = &Polynomial::component_class(2) * &Polynomial::component_class(-5);
        assert_eq!(p, Polynomial::component_class(-3));
    }
}

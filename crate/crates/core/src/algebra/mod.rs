//! Graded-commutative F₂ algebras with optional exterior generators.
//!
//! Coefficients are implicit: a [`Polynomial`] is a set of monomials and
//! addition is symmetric difference.

mod binom;
mod generator;
mod monomial;
mod polynomial;

pub use binom::lucas_binom;
pub use generator::{Family, Generator};
pub use monomial::Monomial;
pub use polynomial::Polynomial;

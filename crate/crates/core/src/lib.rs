//! Exact mod-2 computation engine for the homology of framed little disks
//! algebras.
//!
//! Values are finite F₂-sums of monomials ([`Polynomial`]). An
//! [`AlgebraModel`] describes one concrete algebra (a truncation of
//! `H_*Ω²S³`, `H_*Ω²S²`, `H_*SO(n)`, a fragment of `H_*QS⁰`, ...), and the
//! [`ops`] module evaluates Pontryagin products, Browder brackets, Kudo-Araki
//! operations and higher BV operators in it. The [`chain`] module is an
//! independent cellular oracle used to cross-check the homology-level
//! formulas, and [`hurewicz`] runs the image-of-J computations.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod chain;
mod error;
pub mod expr;
pub mod hurewicz;
pub mod linalg;
pub mod model;
pub mod models;
pub mod ops;
pub mod report;
pub mod verify;

pub use algebra::{lucas_binom, Family, Generator, Monomial, Polynomial};
pub use error::Error;
pub use expr::Expr;
pub use model::{AlgebraModel, Disks};
pub use report::{Record, VerificationReport};

/// Version string stamped into every report.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

pub type Result<T, E = Error> = core::result::Result<T, E>;

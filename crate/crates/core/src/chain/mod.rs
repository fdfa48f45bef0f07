//! Cellular chain-level oracle.

pub mod cells;
pub mod complex;
pub mod square;
pub mod checks;

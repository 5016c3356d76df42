//! Conjugacy classes and the full character table of `GL₂(F_q)`, `q` an
//! odd prime.

use thiserror::Error;

mod classes;
mod field;
mod table;

pub use classes::{classify, gl2_classes, gl2_order, Gl2Class, Gl2Family, Mat2};
pub use field::{FiniteField, MAX_Q};
pub use table::{
    borel_induced, gl2_table, gl2_verify, torus_induced, Gl2Character, Gl2Series, Gl2Table,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gl2Error {
    #[error("q = {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("q = {0} exceeds the discrete-log table bound {MAX_Q}")]
    TooLarge(u64),
    #[error(transparent)]
    Table(#[from] crate::chartab::ChartabError),
}

#[cfg(test)]
mod tests;

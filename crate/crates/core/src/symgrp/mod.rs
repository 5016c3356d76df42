//! Partitions, characters of `S_n`, Schur polynomials and `GL_N` dimensions.

mod characters;
mod partition;
mod poly;
mod schur;

pub use characters::{
    frobenius_character, kostka, sn_layout, sn_table, sn_table_on, standard_representative, u_character,
    SN_TABLE_BOUND,
};
pub use partition::{factorial, partitions_of, CycleType, Partition};
pub use poly::SparsePoly;
pub use schur::{field_pow, gl_dim, schur_all_ones, schur_eval, schur_geometric};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("S_{0} exceeds the table bound of {SN_TABLE_BOUND}")]
    BoundExceeded(usize),
    #[error("points {0} and {1} coincide; use a specialization formula")]
    RepeatedPoints(usize, usize),
    #[error("{parts} parts do not fit in {vars} variables")]
    TooManyParts { parts: usize, vars: usize },
    #[error("the specialization has a vanishing denominator")]
    DegenerateSpecialization,
    #[error("weight is not weakly decreasing: {0}")]
    NotMonotone(String),
    #[error("table: {0}")]
    Table(String),
}

#[cfg(test)]
mod tests;

//! Class functions and character tables.

mod abelian;
mod builtin;
mod classfn;
mod induce;
mod layout;
mod semidirect;
mod table;

use thiserror::Error;

use crate::exact::ExactError;
use crate::permgroup::PermGroupError;

pub use abelian::abelian_dual_table;
pub use builtin::{builtin_table, builtin_table_on, BUILTIN_TABLES};
pub use classfn::{same_group, ClassFunction};
pub use induce::{induce, restrict};
pub use layout::{ClassDescriptor, ClassInfo, ClassLayout};
pub use semidirect::{
    automorphism_from_images, dihedral_semidirect, heisenberg_semidirect, semidirect_table, SemidirectProduct,
};
pub use table::{CharacterRow, CharacterTable, Check, Decomposition, TableFile, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChartabError {
    #[error("class functions live on different groups ({0} vs {1})")]
    GroupMismatch(String, String),
    #[error("expected {expected} class values, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("not a character of norm one (norm {0})")]
    NotUnitNorm(String),
    #[error("the class layout has no power map")]
    MissingPowerMap,
    #[error("the class layout has no class representatives")]
    MissingRepresentatives,
    #[error("group {0} is not abelian")]
    NotAbelian(String),
    #[error("stabilizer table unavailable: {0}")]
    StabilizerTableUnavailable(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("unknown table `{0}`")]
    UnknownTable(String),
    #[error("cannot transport table: {0}")]
    Transport(String),
    #[error("malformed table: {0}")]
    BadTable(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Group(#[from] PermGroupError),
}

#[cfg(test)]
mod tests;

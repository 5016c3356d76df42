//! Representations of quivers over the rationals, reflection functors,
//! and the constructive side of Gabriel's theorem.
//!
//! Indecomposability is tested as `dim End(V) = 1`.

mod gabriel;
mod quiver;
pub mod random;
mod rep;

pub use gabriel::{
    decompose, enumerate_indecomposables, indecomposable_for_root, isomorphic, reflect_sink, reflect_source,
};
pub use quiver::{admissible_ordering, Quiver};
pub use rep::{hom_dim, is_indecomposable, QuiverRep};

use thiserror::Error;

use crate::linalg::LinalgError;
use crate::rootsys::RootSysError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("representations live on different quivers")]
    QuiverMismatch,
    #[error("vertex {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("arrow {arrow}: expected a {expected:?} matrix, found {found:?}")]
    ShapeMismatch { arrow: usize, expected: (usize, usize), found: (usize, usize) },
    #[error("malformed representation: {0}")]
    Malformed(String),
    #[error("vertex {0} is not a sink")]
    NotSink(usize),
    #[error("vertex {0} is not a source")]
    NotSource(usize),
    #[error("the quiver has a directed cycle")]
    DirectedCycle,
    #[error("not finite type: the underlying graph is {0}")]
    NotFiniteType(String),
    #[error("{0:?} is not a positive root")]
    NotPositiveRoot(Vec<i64>),
    #[error("reflection sequence did not terminate")]
    StepLimit,
    #[error("inconsistent decomposition: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Graph(#[from] RootSysError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

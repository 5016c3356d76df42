//! Graphs, Cartan matrices, Dynkin and affine classification, roots,
//! Weyl groups and Coxeter elements.

mod cartan;
mod graph;
mod roots;

pub use cartan::{classify, CartanMatrix};
pub use graph::{Classification, DynkinType, Family, Graph};
pub use roots::{
    coxeter, enumerate_roots, height, is_positive, reflect, reflection_matrix, simple_root, sort_roots,
    weyl_group_order, Coxeter, RootSet, RootVector, COXETER_ORDER_BOUND, DEFAULT_WEYL_BOUND,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSysError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("unknown Dynkin type {0}")]
    UnknownType(String),
    #[error("the form is not positive definite")]
    NotDefinite,
    #[error("order exceeds {0}")]
    InfiniteOrder(u64),
}

#[cfg(test)]
mod tests;

//! Exact computational representation theory of finite groups and quivers.

pub mod chartab;
pub mod exact;
pub mod gl2fq;
pub mod io;
pub mod linalg;
pub mod permgroup;
pub mod quiverrep;
pub mod rootsys;
pub mod selftest;
pub mod symgrp;

pub use chartab::{CharacterTable, ClassFunction, ClassLayout};
pub use exact::{zeta, Cyclotomic, ExactError, Field, Rational};
pub use gl2fq::{Gl2Error, Gl2Table};
pub use io::{Artifact, IoError};
pub use linalg::{LinalgError, Matrix};
pub use permgroup::{PermGroup, Permutation, SubgroupView};
pub use quiverrep::{Quiver, QuiverRep};
pub use rootsys::{CartanMatrix, DynkinType, Graph};
pub use symgrp::{CycleType, Partition};

//! Fundamental groups of finite simplicial complexes and of incidence
//! algebras of posets.
//!
//! The crate computes edge-path group presentations of complexes and
//! `Π₁(Q, I_Q)` presentations of quivers with their parallel ideal, moves
//! between complexes, posets and quivers, and checks the resulting groups
//! against each other through abelianization, finite hom counts, simplicial
//! homology and Hochschild cohomology in degree one.

pub mod algebra;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod groups;
pub mod pi1;

pub use error::{Error, Result};

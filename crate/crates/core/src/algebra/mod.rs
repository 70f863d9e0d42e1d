//! Exact linear algebra over ℤ, ℚ and `F_p`, simplicial (co)homology in
//! degree one, and incidence algebras with their first Hochschild
//! cohomology computed from derivations.
//!
//! No floating point is used anywhere.

mod field;
mod homology;
mod incidence;
mod matrix;

pub use field::{is_prime, FieldSpec};
pub use homology::{h1_cohomology_dim, h1_integral, ChainComplexData};
pub use incidence::{hh1_dimension, IncidenceAlgebra};
pub use matrix::{smith_normal_form, IntMatrix, SmithForm};

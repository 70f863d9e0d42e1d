//! Simplicial complexes, posets and quivers, and the constructions linking
//! them: face poset, order complex, barycentric subdivision, Hasse quiver,
//! and the completed / ordered forms of an acyclic quiver.
//!
//! Hasse arrows point from the smaller element to the larger one.

mod complex;
mod poset;
mod quiver;

pub use complex::{Simplex, SimplicialComplex};
pub(crate) use complex::UnionFind;
pub use poset::{barycentric, pos_of_complex, sim_of_poset, Poset};
pub use quiver::{hasse_quiver, Arrow, DirectedPath, OrderedQuiver, Quiver};

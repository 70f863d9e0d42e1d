//! Fundamental groups: the edge-path group of a complex, `Π₁(Q, I_Q)` of a
//! quiver with its parallel ideal, the maps between walks and edge-paths,
//! and Van Kampen assembly.
//!
//! Walks are stored first step first.

mod edge_path;
mod proof_maps;
mod quiver_group;
mod van_kampen;
mod walk;

pub use edge_path::{complex_spanning_tree, edge_generator, edge_path_presentation, edge_path_word};
pub use proof_maps::{
    check_phi_psi_roundtrip, check_phi_psi_roundtrip_with_budget, phi_walk_to_edgepath, psi_edgepath_to_walk,
    random_closed_walk, rewrites_to_identity, same_element, RoundtripReport, RoundtripSample, Verdict,
    DEFAULT_REWRITE_BUDGET,
};
pub use quiver_group::{quiver_pi1_presentation, QuiverGroup};
pub use van_kampen::{van_kampen_assemble, PresentedQuiverGroup, VanKampen};
pub use walk::{EdgePath, SpanningTree, Step, Walk};

//! Text formats, command dispatch and the randomized theorem checks.
//!
//! Complex files use `simplex v1 v2 ...`, poset files `elem x` and
//! `rel x < y`, quiver files `vertex v` and `arrow id src dst`; `#` starts a
//! comment.

mod checks;
mod commands;
mod format;

pub use checks::{
    check_roundtrip, check_theorem2, check_theorem3, check_theorem4, psi_phi_fixes_arrows, random_acyclic_quiver,
    random_connected_poset, CheckConfig, CheckReport, ROUNDTRIP_SAMPLES,
};
pub use commands::{
    hom_budget_from_env, run, run_command, CheckKind, Cli, Command, ComplexFile, ComplexOp, Outcome, PosetOp,
    QuiverOp, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_OK, HOM_BUDGET_VAR,
};
pub use format::{
    parse_input, parse_invariants, parse_presentation, serialize_complex, serialize_poset, serialize_presentation,
    serialize_quiver, InputDocument, Kind, Record,
};

//! Brute-force reference solver and flow checkers.
//!
//! Nothing here reuses the solver machinery: the oracle builds its own
//! residual network from the raw instance, finds augmenting paths by
//! depth-first search and scans the weights from the smallest upwards.
//! Meant for small instances only.

mod decompose;
mod solve;
mod verify;

pub use decompose::{decompose_flow, Decomposition, PathFlow};
pub use solve::{oracle_solve, threshold_max_flow};
pub use verify::{verify_solution, ArcCheck, NodeCheck, VerificationReport};

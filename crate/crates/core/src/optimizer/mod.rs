//! Steady-state (mu + 1) hypervolume search restricted to a front.
//!
//! Every candidate is generated in the front's intrinsic coordinates, so the
//! population never leaves the front. Each generation adds one offspring and
//! removes the least hypervolume contributor.

mod local;
mod mutation;
mod search;

pub use local::{
    local_opt_check, local_opt_probe, seeded_descent, Counterexample, DescentResult,
    LocalOptVerdict,
};
pub use mutation::{mutate, sample_uniform};
pub use search::{search, RunTrace, SearchConfig, SearchResult};

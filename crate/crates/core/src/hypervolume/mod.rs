//! Exact hypervolume, hypervolume contributions and test oracles.

pub mod contribution;
pub mod oracle;
pub mod sweep;

pub use contribution::{contributions, hvc, least_contributor, ContributionTable};
pub use oracle::{hv_oracle_ie, hv_oracle_mc, McEstimate};
pub use sweep::{hv2, hv3};

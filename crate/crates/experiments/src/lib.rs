//! Experiment harness for the `hvmu` library: reference tables, line-front
//! comparisons, property suites and point-set export.

pub mod error;
pub mod export;
pub mod manifest;
pub mod report;
pub mod suites;
pub mod tables;

pub use error::{ExperimentError, Result};
pub use manifest::Manifest;
pub use report::{Budget, Check, ExperimentReport, OutputFormat, Row, Verdict};

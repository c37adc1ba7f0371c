//! Exact hypervolume in two and three objectives, the line- and plane-based
//! front families, their uniform point sets, closed-form optimal
//! distributions, and a steady-state search for hypervolume-optimal
//! distributions restricted to a front.
//!
//! Geometry and hypervolume code is generic over [`Scalar`] (`f32`, `f64`,
//! [`Rational64`]); the aliases below cover the common cases.

pub mod closed_forms;
pub mod error;
pub mod geometry;
pub mod hypervolume;
pub mod optimizer;
pub mod scalar;

pub use error::{Error, Result};
pub use geometry::{FrontKind, ManifoldCoord};
pub use num_rational::Rational64;
pub use scalar::Scalar;

pub type Point2 = geometry::Point<f64, 2>;
pub type Point3 = geometry::Point<f64, 3>;
pub type ExactPoint2 = geometry::Point<Rational64, 2>;
pub type ExactPoint3 = geometry::Point<Rational64, 3>;
pub type SolutionSet3 = geometry::SolutionSet<f64, 3>;
pub type ExactSolutionSet3 = geometry::SolutionSet<Rational64, 3>;

pub mod front;
pub mod io;
pub mod lattice;
pub mod point;

pub use front::{FrontKind, ManifoldCoord, Segment};
pub use lattice::{das_weights, inverted_das_weights, uniform_line_set};
pub use point::{Point, SolutionSet};

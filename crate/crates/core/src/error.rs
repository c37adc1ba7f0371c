use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("lattice parameter H must be at least 1")]
    ZeroLatticeParameter,
    #[error("unsupported dimension {0}; only 2 and 3 are supported")]
    UnsupportedDimension(usize),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("point {index} does not strictly dominate the reference point")]
    NotDominatingReference { index: usize },
    #[error("non-finite coordinate in point {index}")]
    NonFinite { index: usize },
    #[error("index {index} out of range for a set of {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("operation requires a nonempty point set")]
    EmptySet,
    #[error("inclusion-exclusion oracle is limited to {max} points, got {found}")]
    SetTooLarge { max: usize, found: usize },
    #[error("Monte-Carlo oracle needs at least {min} samples, got {found}")]
    TooFewSamples { min: usize, found: usize },
    #[error("degenerate sampling box")]
    DegenerateBox,
    #[error("{kind} is not a {expected}-based front")]
    WrongFrontKind {
        kind: &'static str,
        expected: &'static str,
    },
    #[error("expected {expected} per-segment counts, got {found}")]
    SegmentCountMismatch { expected: usize, found: usize },
    #[error("segment {segment} needs at least {min} points, got {found}")]
    TooFewOnSegment {
        segment: usize,
        min: usize,
        found: usize,
    },
    #[error("manifold coordinate outside its declared range")]
    CoordOutOfRange,
    #[error("point is {distance} away from the front (limit 0.5)")]
    FarFromFront { distance: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown front kind `{0}`")]
    UnknownFront(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error("parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Core(#[from] hvmu::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed expected-values manifest: {0}")]
    Manifest(#[from] toml::de::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("no expected value for {0}")]
    MissingExpected(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A live recomputation disagreed with itself; indicates an engine bug.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, ExperimentError>;

use thiserror::Error;

/// Errors produced by the simulation library.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Invalid configuration (scenario, controller design, ...).
    #[error("config error: {0}")]
    Config(String),
    /// Operation called on a state that was not prepared for it.
    #[error("state error: {0}")]
    State(String),
    /// Malformed input data (nonuniform sampling, too few records, ...).
    #[error("format error: {0}")]
    Format(String),
    /// Estimation problem is singular or unidentifiable.
    #[error("ill-conditioned: {0}")]
    IllConditioned(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

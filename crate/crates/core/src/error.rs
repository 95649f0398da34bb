//! Crate-wide error type.
//!
//! Variants map onto the CLI exit codes: config errors exit 2, data and
//! shape errors exit 3, numeric failures exit 4.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration: unknown key, out-of-range hyperparameter, bad
    /// CLI usage.
    #[error("config: {0}")]
    Config(String),

    /// Malformed dataset, label out of range, missing domain labels.
    #[error("data: {0}")]
    Data(String),

    /// Tensor shape disagreement.
    #[error("shape: {0}")]
    Shape(String),

    /// NaN/Inf encountered, or a numeric procedure diverged.
    #[error("numeric: {0}")]
    Numeric(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-parsable code, emitted on stderr by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Config(_) => "E_CONFIG",
            Error::Data(_) => "E_DATA",
            Error::Shape(_) => "E_SHAPE",
            Error::Numeric(_) => "E_NUMERIC",
            Error::Io(_) => "E_IO",
        }
    }

    /// Process exit code for the CLI front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Data(_) | Error::Shape(_) | Error::Io(_) => 3,
            Error::Numeric(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

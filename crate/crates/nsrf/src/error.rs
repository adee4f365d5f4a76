//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    /// Invalid input data, configuration, or file contents.
    #[error("validation: {0}")]
    Validation(String),

    /// Mismatched tape/array shapes.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Non-finite values or other numerical failures.
    #[error("numerical: {0}")]
    Numerical(String),

    /// A node or operation the tape cannot differentiate.
    #[error("autodiff: {0}")]
    Autodiff(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("image: {0}")]
    Image(#[from] image::ImageError),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }

    pub fn autodiff(msg: impl Into<String>) -> Self {
        Error::Autodiff(msg.into())
    }

    /// Process exit code for the CLI: 2 for bad inputs, 3 for numerical
    /// aborts, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Validation(_) | Error::Shape(_) | Error::Io(_) | Error::Json(_)
            | Error::Image(_) => 2,
            Error::Numerical(_) => 3,
            Error::Autodiff(_) => 1,
        }
    }
}

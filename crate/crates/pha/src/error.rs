use thiserror::Error;

/// Library-level error type. Parse/validation problems and domain
/// failures (singular elements, mismatched algebras) are kept apart so
/// the CLI can map them to distinct exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("{0}")]
    Domain(String),

    #[error("element is not invertible: characteristic function vanishes at {point}")]
    NotInvertible { point: String },

    #[error("matrix over the algebra is not invertible: det ({det}) lies in the zero set")]
    SingularPhm { det: String },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// True for errors that indicate malformed input rather than a
    /// well-posed question with a negative answer.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Shape(_))
    }
}

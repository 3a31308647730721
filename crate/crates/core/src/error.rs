use thiserror::Error;

use crate::report::Violation;

/// Location-tagged error raised while reading an algebra file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    /// The tables do not describe a valid structure of the required kind.
    #[error("invalid structure: {0}")]
    Structure(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A class validator rejected the input.
    #[error("{0}")]
    Violation(Box<Violation>),

    #[error("{op} not well-defined: lower bounds {witness:?} give different values")]
    NotWellDefined {
        op: &'static str,
        witness: Vec<usize>,
    },

    #[error("incompatible section family at {witness:?}")]
    IncompatibleFamily { witness: Vec<usize> },

    #[error("size {size} exceeds the cap of {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("property `{property}` does not apply to class {class}")]
    PropertyNotApplicable { property: String, class: String },
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::Violation(Box::new(v))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

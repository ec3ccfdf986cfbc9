use thiserror::Error;

/// Errors raised by the library.
///
/// `MalformedInput` and `Overflow` describe bad caller data; every other
/// variant is a mathematical outcome (the input is well formed but the
/// operation does not apply to it).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("arithmetic overflow while building a numerical set")]
    Overflow,

    #[error("{0} is not a numerical semigroup")]
    NotASemigroup(String),

    #[error("{0} is not a symmetric numerical semigroup")]
    NotSymmetric(String),

    #[error("{0} is not a pseudo-symmetric numerical semigroup")]
    NotPseudoSymmetric(String),

    #[error("excluded case: {0}")]
    ExcludedCase(String),

    #[error("index {index} out of range (must be < {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),

    #[error("highlighted box ({0}, {1}) lies outside the diagram")]
    InvalidHighlight(usize, usize),

    #[error("invalid render options: {0}")]
    InvalidOptions(String),
}

impl Error {
    /// True for errors caused by unparseable or ill-formed caller data, as
    /// opposed to domain outcomes.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::MalformedInput(_) | Error::Overflow | Error::InvalidOptions(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

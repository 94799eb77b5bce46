use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The computed Hilbert function left the complete intersection series,
    /// so the forms are not a regular sequence up to this degree.
    #[error("regular-sequence certification failed in degree {degree}: computed {computed}, series predicts {expected}")]
    Certification {
        degree: i64,
        computed: usize,
        expected: usize,
    },

    #[error("zeta undefined: h = {h} does not divide xi = {xi}")]
    UndefinedZeta { h: i64, xi: i64 },

    #[error("unsupported twist t = {0}")]
    UnsupportedTwist(i64),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("inconsistent computation: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    /// Process exit status used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::Certification { .. } => 3,
            Error::Inconsistent(_) => 1,
            Error::Dimension(_)
            | Error::InvalidInput(_)
            | Error::UndefinedZeta { .. }
            | Error::UnsupportedTwist(_)
            | Error::Precondition(_) => 4,
        }
    }
}

use thiserror::Error;

/// Errors raised by the library. Every variant maps onto one CLI exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A quasisymmetric function that was required to be symmetric is not.
    /// The two compositions are rearrangements of each other with different
    /// coefficients.
    #[error("not symmetric: coefficients of M{left:?} and M{right:?} differ")]
    NotSymmetric { left: Vec<usize>, right: Vec<usize> },

    #[error("resource budget exceeded: n = {n} is larger than the factorial budget {budget}")]
    Budget { n: usize, budget: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit status used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Parse(_) => 1,
            Error::NotSymmetric { .. } => 2,
            Error::Budget { .. } => 3,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

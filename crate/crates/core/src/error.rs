use thiserror::Error;

/// Everything that can go wrong while parsing or analysing a curve.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("polynomial is not homogeneous: found terms of degree {first} and {second}")]
    NonHomogeneous { first: u32, second: u32 },

    #[error("the zero polynomial does not define a curve")]
    ZeroPolynomial,

    #[error("curve degree {0} is unsupported (need degree >= 3)")]
    DegreeTooSmall(u32),

    #[error("vector length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("denominator {0} is not invertible modulo the working prime")]
    BadDenominator(String),

    #[error("invalid line arrangement: {0}")]
    Arrangement(String),

    #[error("curve not reduced or singular locus not finite: {0}")]
    NotReduced(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code for this error: 1 for bad input, 3 for consistency failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the exact-arithmetic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("series must vanish at 0 for composition or reversion")]
    NonzeroConstantTerm,
    #[error("coefficient {0} is not invertible in the coefficient ring")]
    NotInvertible(String),
    #[error("inexact division: {dividend} / {divisor}")]
    InexactDivision { dividend: String, divisor: String },
    #[error("index ({n}, {k}) beyond truncation order {order}")]
    IndexOutOfRange { n: usize, k: usize, order: usize },
    #[error("need {needed} terms, only {available} supplied")]
    InsufficientTerms { needed: usize, available: usize },
    #[error("matrix size mismatch: {0}")]
    SizeMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("zero superdiagonal entry in row {0} of production matrix")]
    ZeroSuperdiagonal(usize),
    #[error("matrix is not of the required shape: {0}")]
    Shape(String),
    #[error("no fit: residual {residual} at x^{index}")]
    NoFit { index: usize, residual: String },
    #[error("division by zero in factor {0}")]
    DivisionByZero(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("sequence has zero leading term")]
    ZeroLeadingTerm,
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

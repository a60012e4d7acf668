//! Error type shared by the whole engine.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("chart mismatch: {0}")]
    ChartMismatch(String),
    #[error("unknown coordinate `{0}`")]
    UnknownCoordinate(String),
    #[error("missing assignment for `{0}`")]
    MissingAssignment(String),
    #[error("parameter `{0}` must be assigned a strictly positive value")]
    NonPositiveSigma(String),
    #[error("leftover phantom logarithm of `{0}`; apply a scale first")]
    PhantomLog(String),
    #[error("missing scale component for phantom `{0}`")]
    MissingScale(String),
    #[error("invalid face selection: {0}")]
    InvalidFace(String),
    #[error("not representable in the coefficient ring: {0}")]
    NotRepresentable(String),
    #[error("exponential factor in `{0}` blocks the exact antiderivative")]
    ExpInExactIntegrand(String),
    #[error("integrand depends non-polynomially on the angular variable")]
    NonFourier,
    #[error("degree mismatch: form degree {0}, domain dimension {1}")]
    DegreeMismatch(usize, usize),
    #[error("form does not vanish on the boundary face `{0}`")]
    NotInKernel(String),
    #[error("math domain error: {0}")]
    Domain(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("cannot factor {0} into small primes")]
    Factorization(String),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("type error at `{at}`: {msg}")]
    Type { at: String, msg: String },
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

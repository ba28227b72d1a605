use thiserror::Error;

/// Errors raised by the series, coefficient and optimization layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("truncation order {0} is below the minimum of {min}", min = crate::series::MIN_ORDER)]
    OrderTooSmall(usize),

    #[error("{len} coefficients do not fit a series of order {order}")]
    TooManyCoefficients { len: usize, order: usize },

    #[error("non-finite coefficient at power {0}")]
    NonFinite(usize),

    #[error("series is not normalized (need coeff[0] = 0 and coeff[1] = 1)")]
    NotNormalized,

    #[error("inner series has a nonzero constant term")]
    NonzeroConstantTerm,

    #[error("series has a non-invertible constant term")]
    NotInvertible,

    #[error("logarithmic coefficient index {requested} out of range (have {available})")]
    SequenceTooShort { requested: usize, available: usize },

    #[error("coefficient a5 is required but missing")]
    MissingA5,

    #[error("invalid determinant request: {0}")]
    InvalidRequest(&'static str),

    #[error("zero pivot while solving for a_{0}")]
    ZeroPivot(usize),

    #[error("not a Schwarz series: {0}")]
    NotSchwarz(&'static str),

    #[error("Schur parameter g{index} has modulus {modulus} > 1")]
    SchurParamOutOfDisk { index: usize, modulus: f64 },

    #[error("restriction to {0} leaves a non-polynomial term")]
    NotPolynomial(&'static str),

    #[error("interior grid value {value} at ({x}, {y}) exceeds the boundary maximum {boundary}")]
    InteriorExceedsBoundary {
        x: f64,
        y: f64,
        value: f64,
        boundary: f64,
    },

    #[error("{0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

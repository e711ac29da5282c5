use alloc::string::String;

/// Errors raised by the library.
#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),
    #[error("form is not diagonalizable over the reals: {0}")]
    NotDiagonalizable(&'static str),
    #[error("degenerate form: {0}")]
    DegenerateForm(&'static str),
    #[error("numerical diagonalization failed (residual {residual:e})")]
    NumericalFailure { residual: f64 },
    #[error("form vanishes at the given point")]
    ZeroValue,
    #[error("(0, 0) is not a valid solution")]
    ZeroPair,
    #[error("root enclosure too wide to certify convergents up to the requested denominator")]
    PrecisionExhausted,
    #[error("argument out of domain: {0}")]
    Domain(&'static str),
    #[error("{0} is not squarefree")]
    NotSquarefree(u64),
    #[error("point does not lie on the conic or is not primitive")]
    PointNotOnConic,
    #[error("no conic parametrization satisfies the required relations")]
    NormalizationFailure,
    #[error("no point on the conic within the search bound {0}")]
    NoConicPoint(u64),
    #[error("derived quartic violates a required property: {0}")]
    PropositionViolation(&'static str),
    #[error("closed-form expansion disagrees with the triple rule for {0}")]
    PhiMismatch(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

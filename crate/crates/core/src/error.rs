use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),
    #[error("division by a value indistinguishable from zero")]
    DivisionByZero,
    #[error("expected a p-adic unit")]
    NotAUnit,
    #[error("{0} is not a quadratic residue")]
    NonResidue(String),
    #[error("residue choice {choice} does not square to {target} modulo p")]
    InconsistentResidue { choice: u64, target: u64 },
    #[error("series argument {0} must have positive valuation")]
    SeriesArgument(String),
    #[error("parse error: {0}")]
    Parse(String),

    #[error("polynomial has degree {0}, expected an odd degree 2g+1 >= 3")]
    EvenDegree(usize),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("coefficient {0} has a denominator divisible by p")]
    NonIntegralCoefficient(String),
    #[error("f has repeated roots modulo {0}")]
    BadReduction(u64),

    #[error("point is not on the curve: {0}")]
    NotOnCurve(String),
    #[error("x-coordinate is not integral (point lies in the infinite disc)")]
    NonIntegralPoint,
    #[error("f(x) has odd valuation {0}; no point over Q_p")]
    OddValuation(i64),
    #[error("operation requires a non-Weierstrass disc")]
    WeierstrassDisc,
    #[error("operation requires a finite Weierstrass disc")]
    NotWeierstrassDisc,
    #[error("operation is not defined on the infinite disc")]
    InfiniteDisc,
    #[error("endpoints lie in different residue discs")]
    DifferentDiscs,

    #[error("form has components that are even under the involution")]
    EvenForm,
    #[error("integrand has a pole at an endpoint")]
    PoleAtEndpoint,
    #[error("exact part does not converge at a Weierstrass endpoint")]
    ExactPartDiverges,
    #[error("insufficient precision: {0}")]
    PrecisionExhausted(String),
}

impl Error {
    /// Stable, machine-parsable identifier used by the command line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::PrimeMismatch(..) => "PRIME_MISMATCH",
            Error::InvalidPrime(_) => "BAD_PRIME",
            Error::DivisionByZero => "DIVISION_BY_ZERO",
            Error::NotAUnit => "NOT_A_UNIT",
            Error::NonResidue(_) | Error::InconsistentResidue { .. } => "NON_RESIDUE",
            Error::Parse(_) => "PARSE_ERROR",
            Error::SeriesArgument(_) => "SERIES_ARGUMENT",
            Error::EvenDegree(_) => "BAD_DEGREE",
            Error::NotMonic => "NOT_MONIC",
            Error::NonIntegralCoefficient(_) => "NON_INTEGRAL_COEFFICIENT",
            Error::BadReduction(_) => "BAD_REDUCTION",
            Error::NotOnCurve(_) | Error::OddValuation(_) => "NOT_ON_CURVE",
            Error::NonIntegralPoint | Error::InfiniteDisc => "INFINITE_DISC",
            Error::WeierstrassDisc | Error::NotWeierstrassDisc | Error::DifferentDiscs => {
                "DISC_VIOLATION"
            }
            Error::EvenForm => "EVEN_FORM",
            Error::PoleAtEndpoint => "POLE_AT_ENDPOINT",
            Error::ExactPartDiverges => "EXACT_PART_DIVERGES",
            Error::PrecisionExhausted(_) => "INSUFFICIENT_PRECISION",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

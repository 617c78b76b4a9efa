use thiserror::Error;

/// Errors raised by the arithmetic kernel and the identity checks.
///
/// Every variant is a domain error in the sense that the inputs fall outside
/// the region where the requested quantity is defined.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,
    #[error("pole at q=0")]
    PoleAtZero,
    #[error("series orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("coefficient list has length {len}, expected order+1 = {expected}")]
    SeriesLength { len: usize, expected: usize },
    #[error("partial fractions require distinct nonzero poles")]
    RepeatedPoles,
    #[error("singular parameter locus: a*z - b*c = 0")]
    SingularLocus,
    #[error("negative tau not in scope (tau = {0})")]
    NegativeTau(i64),
    #[error("RHS pole (z)_{{n+1}} vanishes at z = 1")]
    PochhammerPole,
    #[error("index out of range: {0}")]
    IndexRange(String),
    #[error("{0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

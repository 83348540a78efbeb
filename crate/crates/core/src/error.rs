use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree r = {0} is outside 1..=6")]
    DegreeOutOfRange(u32),
    #[error("field of order {0} exceeds the table limit 2^16")]
    FieldTooLarge(u64),
    #[error("ring of order q^e does not fit in 64 bits")]
    RingTooLarge,
    #[error("nilpotency index e must be at least 1")]
    ZeroNilpotency,
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("element is not a unit")]
    NotUnit,
    #[error("division by the zero polynomial")]
    ZeroPolynomialDivisor,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("p = {p} divides m = {m}")]
    NotCoprime { m: u64, p: u64 },
    #[error("value does not belong to this field or ring")]
    ContextMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("ambient space of size {size} exceeds the cap {cap}")]
    CapExceeded { size: u128, cap: u128 },
    #[error("exponent {value} at position {index} is outside [0, {max}]")]
    ExponentOutOfRange { index: usize, value: u64, max: u64 },
    #[error("expected {expected} exponents, got {found}")]
    ExponentCount { expected: usize, found: usize },
    #[error("lambda kind mismatch: operation needs {expected}")]
    KindMismatch { expected: &'static str },
    #[error("tower entry {0} does not divide x^n - lambda")]
    NotADivisor(usize),
    #[error("tower entry {0} does not divide F_0")]
    TowerCondition(usize),
    #[error("delta0^n != lambda")]
    NotAnNthRoot,
    #[error("{0}")]
    Precondition(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not squarefree")]
    NotSquarefree(BigUint),
    #[error("dimension must be an integer >= 4, got {0}")]
    DimensionBelowFour(BigUint),
    #[error("operands belong to different quadratic fields")]
    MismatchedField,
    #[error("invalid quadratic integer: {0}")]
    InvalidQuadInt(String),
    #[error("p = {0} must be an odd prime coprime to 2D")]
    RamifiedPrime(u64),
    #[error("p = {0} is excluded: p must be a prime >= 5 coprime to 6D")]
    ExcludedPrime(u64),
    #[error("continued-fraction budget of {budget} steps exceeded for D = {radicand}")]
    UnitBudgetExceeded { radicand: BigUint, budget: usize },
    #[error("no new prime is guaranteed at level 2 because d_1 = {d1} has the form 2^N + 2")]
    PathologyExcluded { d1: BigUint },
    #[error("p-adic valuation reached the precision cap R = {0}; retry with a larger R")]
    PrecisionExhausted(u32),
    #[error("the bound q^t * 3^p < 2^p * p^(p-r) admits no t >= 0")]
    BoundEmpty,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("soundness failure (this is a bug, not bad input): {0}")]
    Soundness(String),
    #[error("distinct fields expected but D = {0} repeated")]
    DuplicateField(BigUint),
    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

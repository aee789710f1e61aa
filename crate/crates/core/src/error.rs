use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: must be odd and positive")]
    InvalidModulus(i64),
    #[error("upper entry must be odd, got {0}")]
    EvenUpperEntry(i64),
    #[error("zero argument")]
    ZeroArgument,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("not odd: {0}")]
    NotOdd(String),
    #[error("{0} is not primary")]
    NotPrimary(String),
    #[error("{0} is not primary primitive")]
    NotPrimaryPrimitive(String),
    #[error("gcd of two zeros is undefined")]
    BothZero,
    #[error("{0} is not a prime congruent to 1 mod 4")]
    NotSplitPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("non-invertible: gcd({0}, {1}) > 1")]
    NonInvertible(u64, u64),
    #[error("quotient is not congruent to a rational integer modulo {0}")]
    NotRational(u64),
    #[error("degenerate input")]
    Degenerate,
    #[error("{0} is not a root of x^2 + 1 modulo {1}")]
    NotARoot(u64, u64),
    #[error("{0} has no primitive representation as a sum of two squares")]
    NoPrimitiveRepresentation(u64),
    #[error("{0} is not cubefree")]
    NotCubefree(u64),
    #[error("{0} is not squarefree")]
    NotSquarefree(u64),
    #[error("divergent: |gamma| = {0} >= 1")]
    Divergent(f64),
    #[error("hypotheses not satisfied: {0}")]
    Hypothesis(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
}

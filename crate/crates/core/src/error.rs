use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("modulus is not irreducible over F_{0}")]
    NotIrreducible(u64),
    #[error("field of order {p}^{degree} is too large")]
    FieldTooLarge { p: u64, degree: u32 },
    #[error("element {0} is outside the field")]
    ElementOutOfRange(u64),
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd({m}, {q}) != 1: repeated-root codes are not supported")]
    RepeatedRoot { m: u64, q: u64 },
    #[error("{n} does not divide the multiplicative group order {order}")]
    NoRootOfUnity { n: u64, order: u64 },
    #[error("coefficient does not lie in the base field")]
    NotInBaseField,
    #[error("basis is singular")]
    SingularBasis,
    #[error("matrix is not upper triangular")]
    NotTriangular,
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("{0} is not a unit")]
    NotUnit(String),
    #[error("lengths {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("message row {row} has degree {degree}, limit is {limit}")]
    MessageOverflow { row: usize, degree: usize, limit: usize },
    #[error("no certificate: {0}")]
    NoCertificate(String),
    #[error("enumeration of {needed} exceeds the budget of {budget}")]
    BudgetExceeded { needed: String, budget: String },
    #[error("the code is the zero code")]
    ZeroCode,
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("invalid decoder setup: {0}")]
    InvalidSetup(String),
}

pub type Result<T> = std::result::Result<T, Error>;

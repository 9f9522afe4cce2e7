use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid order: {0}")]
    InvalidOrder(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("associativity fails for ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("ill-conditioned: {0}")]
    Conditioning(String),

    #[error("index out of range: {0}")]
    Index(String),

    #[error("polynomial division is not exact over the integers")]
    NotDivisible,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    /// `Φ_n` does not divide the polynomial, so no balanced decomposition exists.
    #[error("polynomial is not divisible by the cyclotomic polynomial of order {0}")]
    NotBalanced(u64),

    #[error("{n} has {primes} distinct prime factors; at most two are supported (see the n = 105 counterexample)")]
    TooManyPrimes { n: u64, primes: usize },

    #[error("trivial representation: {0}")]
    TrivialRepresentation(String),

    #[error("classification methods disagree: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

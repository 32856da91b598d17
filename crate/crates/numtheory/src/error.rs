use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("argument must be positive")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(String),
    #[error("prime {r} divides {n}")]
    Divides { r: u64, n: String },
    #[error("prime {r} does not divide {n}")]
    NotDividing { r: u64, n: String },
    #[error("modulus must be an odd prime, got {0}")]
    EvenModulus(u64),
    #[error("integer too large to factor: {0} bits")]
    TooLarge(u64),
    #[error("r-part formula disagrees with direct valuation for q={q}, d={d}, r={r}")]
    FormulaMismatch { q: String, d: u64, r: u64 },
}

//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("modulus is not irreducible over F_{p}")]
    NotIrreducible { p: u64 },
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("field size {q} exceeds the ceiling {ceiling} (set CHROMASUM_Q_CEILING to raise it)")]
    FieldTooLarge { q: u64, ceiling: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator is divisible by p = {p}")]
    DenominatorDivisibleByP { p: u64 },
    #[error("operands belong to different field specs")]
    SpecMismatch,
    #[error("point is not on the {color} unit circle")]
    NotOnCircle { color: &'static str },
    #[error("krawtchouk arguments out of range: n = {n}, d = {d}, m = {m}")]
    OutOfRange { n: u64, d: u64, m: u64 },
    #[error("invalid field spec string: {0}")]
    BadFieldSpec(String),
    #[error("invalid polynumber input: {0}")]
    BadPolynumber(String),
    #[error("bad range: {0}")]
    BadRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;

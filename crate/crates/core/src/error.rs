use thiserror::Error;

/// Errors raised by construction and verification routines.
///
/// A failing identity is never an error: it is reported through a
/// verification report. Errors signal inputs that cannot be
/// evaluated at all.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(i64),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("constant term is not a unit in {0}")]
    NonUnit(String),
    #[error("negative q-exponent: the expression needs a shift of q^{needed} to be representable")]
    NegativeExponent { needed: i64 },
    #[error("divergent specification: {0}")]
    Divergent(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown identity `{0}`")]
    UnknownCase(String),
    #[error("order {requested} exceeds the cap {cap}")]
    OrderCap { requested: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

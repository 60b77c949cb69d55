//! Error type shared across the crate.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `p` failed the primality check.
    NotPrime(String),
    /// A structural parameter (a, m, s, generator list, ...) violates a precondition.
    InvalidParameter(String),
    /// Ring or ambient size exceeds the configured construction limit.
    TooLarge(String),
    /// Supplied modulus is not monic of the right degree or not irreducible mod p.
    NotBasicIrreducible(String),
    /// Operands belong to different Galois rings.
    RingMismatch,
    /// Operands belong to different ambient rings.
    AmbientMismatch,
    /// Inversion of a non-unit was requested.
    NotAUnit(String),
    /// Operation is undefined for the zero ideal.
    ZeroIdeal,
    /// An exhaustive operation would enumerate more elements than allowed.
    EnumerationBound { required: u128, limit: u128 },
    /// Operation is undefined for this ambient kind / characteristic.
    Unsupported(String),
    /// Polynomial text could not be parsed.
    Parse(String),
    /// Internal invariant violated; indicates a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(d) => write!(f, "p must be prime: {d}"),
            Error::InvalidParameter(d) => write!(f, "invalid parameter: {d}"),
            Error::TooLarge(d) => write!(f, "size limit exceeded: {d}"),
            Error::NotBasicIrreducible(d) => write!(f, "modulus is not basic irreducible: {d}"),
            Error::RingMismatch => write!(f, "operands belong to different Galois rings"),
            Error::AmbientMismatch => write!(f, "operands belong to different ambient rings"),
            Error::NotAUnit(d) => write!(f, "not a unit: {d}"),
            Error::ZeroIdeal => write!(f, "operation is undefined for the zero ideal"),
            Error::EnumerationBound { required, limit } => write!(
                f,
                "enumeration of {required} elements exceeds the bound {limit}"
            ),
            Error::Unsupported(d) => write!(f, "unsupported: {d}"),
            Error::Parse(d) => write!(f, "parse error: {d}"),
            Error::Internal(d) => write!(f, "internal invariant violated: {d}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

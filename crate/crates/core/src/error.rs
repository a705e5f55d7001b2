use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Operands live in different Hilbert-space dimensions.
    DimensionMismatch { expected: usize, found: usize },
    /// A structural invariant of the input is violated (empty effect list,
    /// wrong vector length, non-square matrix, ...).
    Structural(String),
    /// A vector that must be normalized is not.
    NotNormalized { norm: f64 },
    /// The Weyl-Heisenberg orbit of a fiducial fails the SIC Gram test.
    NotASicFiducial {
        worst_pair: (usize, usize),
        residual: f64,
    },
    /// Argument outside the mathematical domain of the function.
    OutOfDomain(String),
    /// A certificate step failed (from-above violated, residual too large,
    /// sign inconsistent with the candidate being a maximizer).
    CertificateFailed(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::Structural(msg) => write!(f, "structural error: {msg}"),
            Error::NotNormalized { norm } => {
                write!(f, "vector is not normalized (norm = {norm})")
            }
            Error::NotASicFiducial {
                worst_pair,
                residual,
            } => write!(
                f,
                "not a SIC fiducial: Gram test fails at pair ({}, {}) with residual {:e}",
                worst_pair.0, worst_pair.1, residual
            ),
            Error::OutOfDomain(msg) => write!(f, "out of domain: {msg}"),
            Error::CertificateFailed(msg) => write!(f, "certificate failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

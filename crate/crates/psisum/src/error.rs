//! Error types shared across the crate.

use crate::closed_form::BasisSymbol;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Linear solve with a zero leading coefficient.
    ZeroCoefficient,
    /// No numerical oracle exists for this basis constant.
    UnsupportedConstant(BasisSymbol),
    /// The requested series index does not converge (weight - 2*bpow > -2).
    DivergentIndex { weight: i64, bpow: u32 },
    /// Weight reduction could not bring the expression into the requested form
    /// without creating a divergent piece.
    InvalidReduction { weight: i64, bpow: u32 },
    /// A truncated evaluation would need more terms than the configured ceiling.
    EffortExceeded { needed: u128, ceiling: u64 },
    /// The working precision could not deliver the requested radius.
    PrecisionExhausted { detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroCoefficient => write!(f, "linear solve requires a nonzero coefficient"),
            Error::UnsupportedConstant(sym) => {
                write!(f, "no numerical oracle for basis constant {sym:?}")
            }
            Error::DivergentIndex { weight, bpow } => write!(
                f,
                "series index (weight {weight}, power {bpow}) does not converge"
            ),
            Error::InvalidReduction { weight, bpow } => write!(
                f,
                "weight reduction unavailable for (weight {weight}, power {bpow})"
            ),
            Error::EffortExceeded { needed, ceiling } => write!(
                f,
                "evaluation needs {needed} terms, above the ceiling of {ceiling}"
            ),
            Error::PrecisionExhausted { detail } => {
                write!(f, "requested precision not achieved: {detail}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

//! The exact numeric substrate: arbitrary-precision rationals, canonical
//! quadratic surds, two-term radical sums, certified decimal approximation,
//! and the shared text grammar.

pub mod bounds;
pub mod parse;
pub mod quad;
pub mod radical;
pub mod rational;
pub mod real;
pub mod sign;

use thiserror::Error;

/// Errors from the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("radicand must be nonnegative, got {0}")]
    NegativeRadicand(String),
    #[error("unsupported radical profile: {0}")]
    UnsupportedProfile(String),
}

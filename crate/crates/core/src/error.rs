//! Error types shared across the crate.
//!
//! Hand-rolled (no `thiserror`) so the crate stays `no_std`-clean.

use alloc::string::String;
use core::fmt;

use crate::measures::MeasureId;

/// Rejected sample construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SampleError {
    /// Fewer than two observations.
    TooShort { len: usize },
    /// A value is NaN or infinite.
    NonFinite { index: usize },
    /// Paired samples differ in length.
    LengthMismatch { x_len: usize, y_len: usize },
}

impl fmt::Display for SampleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SampleError::TooShort { len } => {
                write!(f, "sample needs at least 2 observations, got {len}")
            }
            SampleError::NonFinite { index } => {
                write!(f, "non-finite value at index {index}")
            }
            SampleError::LengthMismatch { x_len, y_len } => {
                write!(f, "paired samples differ in length: x has {x_len}, y has {y_len}")
            }
        }
    }
}

/// A dependence measure rejected its input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeasureError {
    /// A constant sample; every coefficient here is undefined on it.
    UndefinedCorrelation,
    /// Constant input to the rearranged covariance: no orientation bound exists.
    UndefinedOrientationBound,
    /// The estimator needs more observations than the sample has.
    InsufficientSample { needed: usize, got: usize },
    /// Tags the measure that failed inside a batch evaluation.
    InMeasure {
        measure: MeasureId,
        source: alloc::boxed::Box<MeasureError>,
    },
}

impl fmt::Display for MeasureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureError::UndefinedCorrelation => write!(f, "undefined correlation: constant sample"),
            MeasureError::UndefinedOrientationBound => {
                write!(f, "undefined orientation bound: constant sample")
            }
            MeasureError::InsufficientSample { needed, got } => {
                write!(f, "insufficient sample: need at least {needed} observations, got {got}")
            }
            MeasureError::InMeasure { measure, source } => {
                write!(f, "{}: {source}", measure.name())
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SampleError {}
#[cfg(feature = "std")]
impl std::error::Error for MeasureError {}

/// Scenario expression parse/eval failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprError {
    /// Unexpected character in the input.
    BadToken { position: usize, found: String },
    /// Input ended or a token appeared where an operand/operator was expected.
    Unexpected { position: usize, expected: &'static str },
    /// Call to a function name the language does not define.
    UnknownFunction { position: usize, name: String },
    /// Variable other than `x`.
    UnknownVariable { position: usize, name: String },
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::BadToken { position, found } => {
                write!(f, "bad token {found:?} at offset {position}")
            }
            ExprError::Unexpected { position, expected } => {
                write!(f, "expected {expected} at offset {position}")
            }
            ExprError::UnknownFunction { position, name } => {
                write!(f, "unknown function {name:?} at offset {position}")
            }
            ExprError::UnknownVariable { position, name } => {
                write!(f, "unknown variable {name:?} at offset {position} (only `x` is defined)")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ExprError {}

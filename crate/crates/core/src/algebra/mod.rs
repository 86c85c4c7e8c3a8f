//! Exact arithmetic on integer polynomials and rational functions in one
//! variable `t`.

mod binomial;
mod graded;
mod poly;
mod rational;

pub use binomial::binomial;
pub use graded::{series_expand, GradedDims};
pub use poly::IntPolynomial;
pub use rational::RationalFunction;

use thiserror::Error;

/// Why an exact division failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DivisionFailure {
    /// The remainder is nonzero; `degree` is its degree.
    Remainder { degree: usize },
    /// The division is exact over the rationals but the quotient has a
    /// non-integer coefficient.
    NonIntegral { degree: usize, value: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("not divisible: {}", describe_division(.0))]
    NotDivisible(DivisionFailure),
    #[error("denominator has zero constant term; not a power series in t")]
    NotASeries,
    #[error("non-integral Taylor coefficient {value} at degree {degree}")]
    IntegralityViolation { degree: usize, value: String },
    #[error("zero denominator")]
    ZeroDenominator,
}

impl AlgebraError {
    /// Short machine-readable name of the failure.
    pub fn kind(&self) -> &'static str {
        match self {
            AlgebraError::NotDivisible(_) => "NotDivisible",
            AlgebraError::NotASeries => "NotASeries",
            AlgebraError::IntegralityViolation { .. } => "IntegralityViolation",
            AlgebraError::ZeroDenominator => "ZeroDenominator",
        }
    }
}

fn describe_division(failure: &DivisionFailure) -> String {
    match failure {
        DivisionFailure::Remainder { degree } => {
            format!("nonzero remainder of degree {degree}")
        }
        DivisionFailure::NonIntegral { degree, value } => {
            format!("non-integral quotient coefficient {value} at degree {degree}")
        }
    }
}

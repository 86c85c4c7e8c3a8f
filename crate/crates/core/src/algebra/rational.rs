use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{series_expand, AlgebraError, GradedDims, IntPolynomial};

/// Exact quotient of two integer polynomials.
///
/// Never reduced by a gcd: equality is decided by cross-multiplication, and
/// consumers either divide exactly or expand a power series. The denominator
/// is nonzero with a positive leading coefficient.
#[derive(Clone)]
pub struct RationalFunction {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalFunction {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self, AlgebraError> {
        let Some(lead) = denominator.leading_coeff() else {
            return Err(AlgebraError::ZeroDenominator);
        };
        Ok(if lead.is_negative() {
            RationalFunction {
                numerator: -numerator,
                denominator: -denominator,
            }
        } else {
            RationalFunction {
                numerator,
                denominator,
            }
        })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    /// Certify that the quotient is a polynomial with integer coefficients.
    pub fn to_polynomial(&self) -> Result<IntPolynomial, AlgebraError> {
        self.numerator.div_exact(&self.denominator)
    }

    /// First `order + 1` Taylor coefficients at `t = 0`.
    pub fn series(&self, order: usize) -> Result<GradedDims, AlgebraError> {
        series_expand(self, order)
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn combine(&self, rhs: &Self, sign: i64) -> Self {
        let signed = |p: IntPolynomial| if sign < 0 { -p } else { p };
        if self.denominator == rhs.denominator {
            return RationalFunction {
                numerator: &self.numerator + &signed(rhs.numerator.clone()),
                denominator: self.denominator.clone(),
            };
        }
        RationalFunction {
            numerator: &self.numerator * &rhs.denominator
                + signed(&rhs.numerator * &self.denominator),
            denominator: &self.denominator * &rhs.denominator,
        }
    }
}

impl From<IntPolynomial> for RationalFunction {
    fn from(p: IntPolynomial) -> Self {
        RationalFunction {
            numerator: p,
            denominator: IntPolynomial::one(),
        }
    }
}

/// Cross-multiplication equality.
impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl Eq for RationalFunction {}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == IntPolynomial::one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.combine(rhs, 1)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.combine(rhs, -1)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        // both denominators have positive leading coefficients, so does the product
        RationalFunction {
            numerator: &self.numerator * &rhs.numerator,
            denominator: &self.denominator * &rhs.denominator,
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero().into(), |acc, f| acc + f)
    }
}

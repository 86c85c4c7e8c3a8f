use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, DivisionFailure};

/// Dense univariate polynomial in `t` with arbitrary-precision integer
/// coefficients, indexed by degree.
///
/// Trailing zeros are always trimmed, so the zero polynomial has an empty
/// coefficient vector and no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c * t^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPolynomial { coeffs }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// `1 + s t^k` for `s = ±1`; the building block of every Betti formula.
    pub fn binomial_factor(sign: i64, k: usize) -> Self {
        &Self::one() + &Self::monomial(sign, k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Degrees carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `t^n P(1/t)` with `n` the given formal degree.
    pub fn reflect(&self, n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            assert!(i <= n, "reflection degree {n} below polynomial degree");
            coeffs[n - i] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Coefficients of degree `0..=n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n + 1).cloned().collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// First degree with a negative coefficient.
    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(Signed::is_negative)
    }

    /// Exact quotient `self / den`.
    ///
    /// Division runs over the rationals; the quotient must leave no remainder
    /// and have integer coefficients.
    pub fn div_exact(&self, den: &IntPolynomial) -> Result<IntPolynomial, AlgebraError> {
        let Some(den_deg) = den.degree() else {
            return Err(AlgebraError::ZeroDenominator);
        };
        let Some(num_deg) = self.degree() else {
            return Ok(Self::zero());
        };
        if num_deg < den_deg {
            return Err(AlgebraError::NotDivisible(DivisionFailure::Remainder {
                degree: num_deg,
            }));
        }

        let lead = BigRational::from_integer(den.coeffs[den_deg].clone());
        let den_q: Vec<BigRational> = den
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut quot = vec![BigRational::zero(); num_deg - den_deg + 1];

        for k in (0..quot.len()).rev() {
            let c = &rem[k + den_deg] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in den_q.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }

        if let Some(degree) = rem.iter().rposition(|c| !c.is_zero()) {
            return Err(AlgebraError::NotDivisible(DivisionFailure::Remainder {
                degree,
            }));
        }
        let mut coeffs = Vec::with_capacity(quot.len());
        for (degree, q) in quot.into_iter().enumerate() {
            if !q.is_integer() {
                return Err(AlgebraError::NotDivisible(DivisionFailure::NonIntegral {
                    degree,
                    value: q.to_string(),
                }));
            }
            coeffs.push(q.to_integer());
        }
        Ok(Self::new(coeffs))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let zero = BigInt::zero();
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    f(
                        self.coeffs.get(i).unwrap_or(&zero),
                        other.coeffs.get(i).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = magnitude.is_one();
            match i {
                0 => write!(f, "{magnitude}")?,
                1 if unit => f.write_str("t")?,
                1 => write!(f, "{magnitude}t")?,
                _ if unit => write!(f, "t^{i}")?,
                _ => write!(f, "{magnitude}t^{i}")?,
            }
        }
        Ok(())
    }
}

impl From<BigInt> for IntPolynomial {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: &IntPolynomial) -> IntPolynomial { (&self).$m(rhs) }
        }
        impl<'a> $tr<IntPolynomial> for &'a IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a IntPolynomial> for IntPolynomial {
    fn sum<I: Iterator<Item = &'a IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn add_cancels_to_canonical_zero() {
        assert_eq!(p(&[1, 1]) + p(&[1, -1]), p(&[2]));
        assert_eq!(IntPolynomial::zero() + p(&[3, 0, 5]), p(&[3, 0, 5]));
        let z = p(&[0, 0, 1]) + p(&[0, 0, -1]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert!(z.coeffs().is_empty());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(&[1, 1]) * p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(p(&[4, 0, 7]) * IntPolynomial::one(), p(&[4, 0, 7]));
        assert_eq!(p(&[1, 1]) * p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!((p(&[2, 1]) * p(&[0, 0, 3])).degree(), Some(3));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(p(&[1, 1]).pow(4), p(&[1, 4, 6, 4, 1]));
        assert_eq!(p(&[1, -1]).pow(0), IntPolynomial::one());
        assert_eq!(p(&[1, 0, 0, 1]).pow(2), p(&[1, 0, 0, 2, 0, 0, 1]));
    }

    #[test]
    fn div_exact_examples() {
        assert_eq!(p(&[1, 0, -1]).div_exact(&p(&[1, -1])), Ok(p(&[1, 1])));
        assert_eq!(
            p(&[1, 0, 0, 0, 0, 0, -1]).div_exact(&p(&[1, 0, -1])),
            Ok(p(&[1, 0, 1, 0, 1]))
        );
        assert!(matches!(
            p(&[1, 0, 1]).div_exact(&p(&[1, 1])),
            Err(AlgebraError::NotDivisible(DivisionFailure::Remainder { degree: 0 }))
        ));
    }

    #[test]
    fn div_exact_non_integral_is_distinguished() {
        // (1 + t) / (2 + 2t) = 1/2 with zero remainder
        let err = p(&[1, 1]).div_exact(&p(&[2, 2])).unwrap_err();
        assert_eq!(
            err,
            AlgebraError::NotDivisible(DivisionFailure::NonIntegral {
                degree: 0,
                value: "1/2".into()
            })
        );
        assert_eq!(
            p(&[1]).div_exact(&IntPolynomial::zero()),
            Err(AlgebraError::ZeroDenominator)
        );
        assert_eq!(IntPolynomial::zero().div_exact(&p(&[0, 3])), Ok(IntPolynomial::zero()));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -2, 0, 1]).to_string(), "1 - 2t + t^3");
        assert_eq!(p(&[0, 0, 16]).to_string(), "16t^2");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn reflect_and_eval() {
        let q = p(&[1, 4, 7, 4, 1]);
        assert_eq!(q.reflect(4), q);
        assert_eq!(p(&[0, 1]).reflect(2), p(&[0, 1]));
        assert_eq!(p(&[1, 2]).reflect(2), p(&[0, 2, 1]));
        assert_eq!(q.eval(&BigInt::from(-1)), BigInt::from(1));
        assert_eq!(q.valuation(), Some(0));
        assert_eq!(p(&[0, 0, 5, 0, 2]).support(), vec![2, 4]);
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{AlgebraError, IntPolynomial, RationalFunction};

/// Per-degree Betti numbers valid for degrees `0..=truncation_order`.
///
/// `exact` is set when the underlying object is a polynomial of degree at
/// most `truncation_order`, i.e. nothing was cut off.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDims {
    dims: Vec<BigInt>,
    truncation_order: usize,
    exact: bool,
}

impl GradedDims {
    /// Coefficients of `p` in degrees `0..=order`, zero-padded.
    pub fn from_polynomial(p: &IntPolynomial, order: usize) -> Self {
        GradedDims {
            dims: (0..=order).map(|i| p.coeff(i)).collect(),
            truncation_order: order,
            exact: p.degree().is_none_or(|d| d <= order),
        }
    }

    /// The full coefficient list of a polynomial; always exact.
    pub fn exact(p: &IntPolynomial) -> Self {
        Self::from_polynomial(p, p.degree().unwrap_or(0))
    }

    pub fn dims(&self) -> &[BigInt] {
        &self.dims
    }

    pub fn get(&self, degree: usize) -> Option<&BigInt> {
        self.dims.get(degree)
    }

    pub fn truncation_order(&self) -> usize {
        self.truncation_order
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Restrict to degrees `0..=order` (`order` must not exceed the current one).
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.truncation_order, "cannot extend a truncation");
        let exact = self.exact && self.dims[order + 1..].iter().all(Zero::is_zero);
        GradedDims {
            dims: self.dims[..=order].to_vec(),
            truncation_order: order,
            exact,
        }
    }

    pub fn first_negative(&self) -> Option<usize> {
        self.dims.iter().position(Signed::is_negative)
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.dims.clone())
    }
}

/// Taylor coefficients of `f` at `t = 0` through degree `order`.
pub fn series_expand(f: &RationalFunction, order: usize) -> Result<GradedDims, AlgebraError> {
    let num = f.numerator();
    let den = f.denominator();
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(AlgebraError::NotASeries);
    }
    let d0 = BigRational::from_integer(d0);
    let den_q: Vec<BigRational> = den
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();

    // a_k d_0 = n_k - sum_{j>=1} d_j a_{k-j}
    let mut series: Vec<BigRational> = Vec::with_capacity(order + 1);
    let mut dims = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = BigRational::from_integer(num.coeff(k));
        for (j, d) in den_q.iter().enumerate().skip(1).take(k) {
            if !d.is_zero() {
                acc -= d * &series[k - j];
            }
        }
        let a = acc / &d0;
        if !a.is_integer() {
            return Err(AlgebraError::IntegralityViolation {
                degree: k,
                value: a.to_string(),
            });
        }
        dims.push(a.to_integer());
        series.push(a);
    }

    let truncated = IntPolynomial::new(dims.clone());
    let exact = &truncated * den == *num;
    Ok(GradedDims {
        dims,
        truncation_order: order,
        exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn geometric_series() {
        let f = RationalFunction::new(p(&[1]), p(&[1, 0, -1])).unwrap();
        let s = series_expand(&f, 5).unwrap();
        assert_eq!(s.dims(), ints(&[1, 0, 1, 0, 1, 0]).as_slice());
        assert!(!s.is_exact());
        assert_eq!(s.truncation_order(), 5);
    }

    #[test]
    fn polynomial_is_exact() {
        let f = RationalFunction::from(p(&[1, 1]));
        let s = series_expand(&f, 3).unwrap();
        assert_eq!(s.dims(), ints(&[1, 1, 0, 0]).as_slice());
        assert!(s.is_exact());
        // (1 - t^2)/(1 - t) is the polynomial 1 + t
        let g = RationalFunction::new(p(&[1, 0, -1]), p(&[1, -1])).unwrap();
        assert!(series_expand(&g, 2).unwrap().is_exact());
        assert!(!series_expand(&g, 0).unwrap().is_exact());
    }

    #[test]
    fn genus_one_binomial_over_geometric() {
        // (1+t)^2 / (1 - t^2); oracle: (1 + 2t + t^2)(1 + t^2 + t^4 + ...)
        let f = RationalFunction::new(p(&[1, 1]).pow(2), p(&[1, 0, -1])).unwrap();
        let s = series_expand(&f, 3).unwrap();
        assert_eq!(s.dims(), ints(&[1, 2, 2, 2]).as_slice());
    }

    #[test]
    fn errors() {
        let f = RationalFunction::new(p(&[1]), p(&[0, 1])).unwrap();
        assert_eq!(series_expand(&f, 3), Err(AlgebraError::NotASeries));
        let h = RationalFunction::new(p(&[1]), p(&[2])).unwrap();
        assert!(matches!(
            series_expand(&h, 3),
            Err(AlgebraError::IntegralityViolation { degree: 0, .. })
        ));
    }

    #[test]
    fn truncation_matches_shorter_expansion() {
        let f = RationalFunction::new(p(&[1, 3, 0, 1]), p(&[1, -1, 0, 0, -1])).unwrap();
        let long = series_expand(&f, 30).unwrap();
        let short = series_expand(&f, 12).unwrap();
        assert_eq!(long.truncate(12), short);
    }
}

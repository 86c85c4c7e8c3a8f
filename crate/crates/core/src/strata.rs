//! Poincaré polynomials assembled from the Morse-Bott stratification of the
//! fixed-determinant Higgs moduli space `M0(2,0)` under the circle action.
//!
//! The critical set `C_d`, `1 ≤ d ≤ g-1`, is the `Γ₂`-cover of the symmetric
//! product `S^n M` with `n = 2g-2-2d`, and enters with index shift
//! `2μ_d = 2g+4d-2`. The minimum `C_0` retracts onto `N0(2,0) ≅ R0`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{binomial, IntPolynomial};
use crate::error::Result;
use crate::formulas::{psu_poly, GenusParams};

/// One non-minimal critical stratum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StratumSpec {
    pub d: usize,
    pub mu: usize,
    pub n: usize,
}

impl StratumSpec {
    /// Stratum `d` at genus `p`; `None` unless `1 ≤ d ≤ g-1`.
    pub fn new(d: usize, p: GenusParams) -> Option<Self> {
        let g = p.g();
        if d == 0 || d >= g {
            return None;
        }
        let spec = StratumSpec {
            d,
            mu: g - 1 + 2 * d,
            n: 2 * g - 2 - 2 * d,
        };
        debug_assert_eq!(2 * spec.mu, 2 * g + 4 * d - 2);
        debug_assert_eq!(spec.top_degree(), p.top_degree());
        Some(spec)
    }

    /// Real codimension `2μ_d`.
    pub fn index_shift(&self) -> usize {
        2 * self.mu
    }

    /// Top degree of `t^{2μ_d} P_t(S^n M)`; always `6g-6`.
    pub fn top_degree(&self) -> usize {
        self.index_shift() + 2 * self.n
    }

    /// Degree `2μ_d + n` where the Prym classes of this stratum sit.
    pub fn prym_degree(&self) -> usize {
        self.index_shift() + self.n
    }
}

/// Strata `d = 1, …, g-1` in order.
pub fn strata(p: GenusParams) -> impl Iterator<Item = StratumSpec> {
    (1..p.g()).filter_map(move |d| StratumSpec::new(d, p))
}

/// Power series in an auxiliary variable `x` with polynomial-in-`t`
/// coefficients, truncated at a fixed `x`-order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XSeries {
    terms: Vec<IntPolynomial>,
}

impl XSeries {
    /// `Σ_{k ≤ order} (r x)^k`, the expansion of `1/(1 - r x)`.
    pub fn geometric(ratio: &IntPolynomial, order: usize) -> Self {
        let mut terms = Vec::with_capacity(order + 1);
        let mut power = IntPolynomial::one();
        for _ in 0..=order {
            let next = &power * ratio;
            terms.push(power);
            power = next;
        }
        XSeries { terms }
    }

    /// `(1 + r x)^e` truncated at `order`.
    pub fn binomial_power(ratio: &IntPolynomial, e: u32, order: usize) -> Self {
        let base = XSeries {
            terms: vec![IntPolynomial::one(), ratio.clone()],
        };
        let mut acc = XSeries {
            terms: vec![IntPolynomial::one()],
        };
        for _ in 0..e {
            acc = acc.mul_truncated(&base, order);
        }
        acc
    }

    pub fn mul_truncated(&self, other: &Self, order: usize) -> Self {
        let len = (self.terms.len() + other.terms.len() - 1).min(order + 1);
        let mut terms = vec![IntPolynomial::zero(); len];
        for (i, a) in self.terms.iter().enumerate() {
            for (j, b) in other.terms.iter().enumerate().take(len.saturating_sub(i)) {
                terms[i + j] = &terms[i + j] + &(a * b);
            }
        }
        XSeries { terms }
    }

    pub fn coeff(&self, n: usize) -> IntPolynomial {
        self.terms.get(n).cloned().unwrap_or_else(IntPolynomial::zero)
    }

    pub fn terms(&self) -> &[IntPolynomial] {
        &self.terms
    }
}

/// Macdonald's generating function `(1+xt)^{2g} / ((1-x)(1-xt²))` through
/// `x^order`.
pub fn macdonald_series(p: GenusParams, order: usize) -> XSeries {
    let t = IntPolynomial::t();
    XSeries::binomial_power(&t, 2 * p.genus(), order)
        .mul_truncated(&XSeries::geometric(&IntPolynomial::one(), order), order)
        .mul_truncated(&XSeries::geometric(&t.pow(2), order), order)
}

/// `P_t(S^n M)`, the coefficient of `x^n` in Macdonald's generating function.
pub fn sym_product_poincare(n: usize, p: GenusParams) -> IntPolynomial {
    macdonald_series(p, n).coeff(n)
}

/// Middle-degree Prym contribution `(2^{2g}-1)·C(2g-2, n)·t^n` of the
/// nontrivial `Γ₂` characters on `S̃^n M`.
pub fn prym_part(n: usize, p: GenusParams) -> IntPolynomial {
    let dim = binomial(2 * p.g() as u64 - 2, n as u64);
    if dim.is_zero() {
        return IntPolynomial::zero();
    }
    IntPolynomial::monomial(p.nontrivial_characters() * dim, n)
}

/// `P_t(S̃^n M)` for the `Γ₂`-cover of the symmetric product.
pub fn prym_cover_poincare(n: usize, p: GenusParams) -> IntPolynomial {
    sym_product_poincare(n, p) + prym_part(n, p)
}

fn stratum_sum(p: GenusParams, term: impl Fn(usize) -> IntPolynomial) -> IntPolynomial {
    strata(p).map(|s| term(s.n).shift(s.index_shift())).sum()
}

/// `C(t,g) = Σ_{d=1}^{g-1} t^{2μ_d} P_t(S̃^{2g-2-2d} M)`.
pub fn c_poly_strata(p: GenusParams) -> IntPolynomial {
    stratum_sum(p, |n| prym_cover_poincare(n, p))
}

/// `P_t(M0(2,0)) = P_t(N0(2,0)) + C(t,g)` with `P_t(N0(2,0)) = P_t(R0)`.
pub fn m0_poincare_via_strata(p: GenusParams) -> Result<IntPolynomial> {
    Ok(psu_poly(p)? + c_poly_strata(p))
}

/// `Γ₂`-invariant part of the non-minimal strata: the Prym classes drop out.
pub fn gamma2_invariant_strata(p: GenusParams) -> IntPolynomial {
    stratum_sum(p, |n| sym_product_poincare(n, p))
}

/// `Σ_d t^{2μ_d}(2^{2g}-1) C(2g-2, n_d) t^{n_d}`, the non-invariant classes.
pub fn prym_strata(p: GenusParams) -> IntPolynomial {
    stratum_sum(p, |n| prym_part(n, p))
}

/// Euler characteristic of `S^n M` read off `(1-x)^{2g-2}`, i.e. Macdonald's
/// generating function at `t = -1`.
pub fn sym_product_euler(n: usize, p: GenusParams) -> BigInt {
    let b = binomial(2 * p.g() as u64 - 2, n as u64);
    if n.is_multiple_of(2) {
        b
    } else {
        -b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn genus(g: i64) -> GenusParams {
        GenusParams::new(g).unwrap()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn stratum_data() {
        let g = genus(4);
        let all: Vec<_> = strata(g).collect();
        assert_eq!(all.len(), 3);
        assert_eq!(all[0], StratumSpec { d: 1, mu: 5, n: 4 });
        assert_eq!(all[2], StratumSpec { d: 3, mu: 9, n: 0 });
        assert!(all.iter().all(|s| s.top_degree() == 18 && s.n % 2 == 0));
        assert_eq!(StratumSpec::new(0, g), None);
        assert_eq!(StratumSpec::new(4, g), None);
    }

    #[test]
    fn symmetric_products() {
        assert_eq!(sym_product_poincare(0, genus(5)), IntPolynomial::one());
        for g in 2..8 {
            assert_eq!(sym_product_poincare(1, genus(g)), p(&[1, 2 * g, 1]));
        }
        // x^2 coefficient of (1+xt)^4/((1-x)(1-xt^2)) by hand:
        // t^2 C(4,2) + 4t(1 + t^2) + (1 + t^2 + t^4)
        assert_eq!(sym_product_poincare(2, genus(2)), p(&[1, 4, 7, 4, 1]));
        assert_eq!(sym_product_poincare(2, genus(3)), p(&[1, 6, 16, 6, 1]));
    }

    #[test]
    fn prym_covers() {
        assert_eq!(prym_cover_poincare(0, genus(2)), p(&[16]));
        assert_eq!(prym_cover_poincare(1, genus(2)), p(&[1, 34, 1]));
        let g = genus(3);
        assert_eq!(prym_cover_poincare(5, g), sym_product_poincare(5, g));
    }

    #[test]
    fn strata_sums() {
        assert_eq!(c_poly_strata(genus(2)), IntPolynomial::monomial(16, 6));
        let g = genus(3);
        // d = 1: 2mu = 8, n = 2; d = 2: 2mu = 12, n = 0
        let expected = prym_cover_poincare(2, g).shift(8) + prym_cover_poincare(0, g).shift(12);
        assert_eq!(c_poly_strata(g), expected);
        assert_eq!(c_poly_strata(g).degree(), Some(12));
        assert_eq!(gamma2_invariant_strata(genus(2)), IntPolynomial::monomial(1, 6));
        assert_eq!(
            gamma2_invariant_strata(g),
            p(&[1, 6, 16, 6, 1]).shift(8) + IntPolynomial::monomial(1, 12)
        );
        for g in 2..=9 {
            let gp = genus(g);
            assert_eq!(c_poly_strata(gp).valuation(), Some(2 * g as usize + 2));
            let diff = c_poly_strata(gp) - gamma2_invariant_strata(gp);
            assert!(diff.is_nonnegative());
            assert_eq!(diff, prym_strata(gp));
        }
    }

    #[test]
    fn euler_characteristic_matches_generating_function_at_minus_one() {
        let minus_one = BigInt::from(-1);
        for g in 2..=6 {
            let gp = genus(g);
            for n in 0..=(2 * g as usize + 3) {
                assert_eq!(sym_product_poincare(n, gp).eval(&minus_one), sym_product_euler(n, gp));
            }
        }
    }
}

//! Closed-form Poincaré polynomials and series, parameterized by genus.
//!
//! Every rational expression is assembled exactly and then certified: a
//! polynomial answer must divide out with integer coefficients, otherwise
//! the constructor fails with [`Error::Formula`] naming the term.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{binomial, IntPolynomial, RationalFunction};
use crate::error::{Error, Result};

/// Genus of the closed oriented surface, `g ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenusParams {
    g: u32,
}

impl GenusParams {
    pub fn new(g: i64) -> Result<Self> {
        match u32::try_from(g) {
            Ok(g) if g >= 2 => Ok(GenusParams { g }),
            _ => Err(Error::InvalidGenus(g)),
        }
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub(crate) fn g(&self) -> usize {
        self.g as usize
    }

    /// Complex dimension `6g - 6` of the character variety, which is also
    /// the top cohomological degree of `X0` and `R0`.
    pub fn top_degree(&self) -> usize {
        6 * self.g() - 6
    }

    /// `|Γ₂| = 2^{2g}`, the number of 2-torsion points of the Jacobian.
    pub fn gamma2_order(&self) -> BigInt {
        BigInt::one() << (2 * self.g)
    }

    /// `2^{2g} - 1`, the number of nontrivial characters of `Γ₂`.
    pub fn nontrivial_characters(&self) -> BigInt {
        self.gamma2_order() - 1
    }
}

/// Deliberate corruption of a closed form, used to exercise the failure
/// paths of the certification and of `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Tamper {
    #[default]
    None,
    /// Replace the `4(1+t²)` denominator of `C(t,g)` by `1+t²`.
    DropQuarter,
}

fn t_pow(k: usize) -> IntPolynomial {
    IntPolynomial::monomial(1, k)
}

/// `1 + sign·t^k`.
fn one_pm(sign: i64, k: usize) -> IntPolynomial {
    IntPolynomial::binomial_factor(sign, k)
}

fn ratio(num: IntPolynomial, den: IntPolynomial) -> RationalFunction {
    RationalFunction::new(num, den).expect("constant denominators are nonzero")
}

fn int(c: impl Into<BigInt>) -> IntPolynomial {
    IntPolynomial::constant(c)
}

fn check_betti(term: &'static str, p: IntPolynomial) -> Result<IntPolynomial> {
    match p.first_negative() {
        Some(degree) => Err(Error::NegativeBetti { term, degree }),
        None => Ok(p),
    }
}

/// Atiyah-Bott equivariant Poincaré series of the semistable connections
/// with fixed trivial determinant:
/// `((1+t³)^{2g} - t^{2g+2}(1+t)^{2g}) / ((1-t²)(1-t⁴))`.
///
/// By Kirwan surjectivity this is the series used for the semistable
/// summand of the SL(2,C)-equivariant series.
pub fn ab_equivariant_series(p: GenusParams) -> RationalFunction {
    let g = p.g();
    let two_g = 2 * p.genus();
    let num = one_pm(1, 3).pow(two_g) - t_pow(2 * g + 2) * one_pm(1, 1).pow(two_g);
    ratio(num, one_pm(-1, 2) * one_pm(-1, 4))
}

/// The five-term rational expression for `C(t,g)`, unsimplified.
pub fn c_closed_rational(p: GenusParams, tamper: Tamper) -> RationalFunction {
    let g = p.g();
    let two_g = 2 * p.genus();
    let shift = t_pow(4 * g - 4);
    let plus = one_pm(1, 1).pow(two_g);
    let minus = one_pm(-1, 1).pow(two_g);

    let leading = RationalFunction::from(-&shift);

    let strata_bulk = ratio(
        t_pow(2 * g + 2) * &plus,
        one_pm(-1, 2) * one_pm(-1, 4),
    );

    let quarter = match tamper {
        Tamper::None => int(4),
        Tamper::DropQuarter => int(1),
    };
    let alternating = ratio(&minus * &shift, quarter * one_pm(1, 2));

    let bracket = ratio(int(2 * g as i64), one_pm(1, 1))
        + ratio(int(1), t_pow(2) - int(1))
        + ratio(int(-1), int(2))
        + RationalFunction::from(int(3 - 2 * g as i64));
    let correction = ratio(&plus * &shift, int(2) * one_pm(-1, 2)) * bracket;

    // even wedge powers of the (2g-2)-dimensional Prym space
    let prym = ratio(
        (one_pm(1, 1).pow(two_g - 2) + one_pm(-1, 1).pow(two_g - 2) - int(2))
            .shift(4 * g - 4)
            .scale(&p.nontrivial_characters()),
        int(2),
    );

    leading + strata_bulk + alternating + correction + prym
}

/// `C(t,g)` from its closed form, certified to be an integer polynomial.
pub fn c_poly_closed(p: GenusParams) -> Result<IntPolynomial> {
    c_poly_closed_with(p, Tamper::None)
}

pub fn c_poly_closed_with(p: GenusParams, tamper: Tamper) -> Result<IntPolynomial> {
    c_closed_rational(p, tamper)
        .to_polynomial()
        .map_err(Error::formula("C(t,g)"))
}

/// Equivariant Poincaré series of the reducible SU(2) representations,
/// `((1+t)^{2g}(1+t²) + (1-t)^{2g}(1-t²)) / (2(1-t⁴))`.
fn reducible_equivariant_series(p: GenusParams) -> RationalFunction {
    let two_g = 2 * p.genus();
    let num = one_pm(1, 1).pow(two_g) * one_pm(1, 2) + one_pm(-1, 1).pow(two_g) * one_pm(-1, 2);
    ratio(num, int(2) * one_pm(-1, 4))
}

/// `ε(2,k)`: 0 for even `k`, 1 for odd `k`.
fn parity(k: usize) -> usize {
    k % 2
}

/// Primitive-class contributions: for `2 ≤ k ≤ g`,
/// `(C(2g,k) - C(2g,k-2)) t^{k+2ε} (1-t^{2k-2ε})(1-t^{2g-2k+2}) / ((1-t)(1-t⁴))`.
fn primitive_sum(p: GenusParams) -> RationalFunction {
    let g = p.g();
    let n = 2 * g as u64;
    let den = one_pm(-1, 1) * one_pm(-1, 4);
    let num: IntPolynomial = (2..=g)
        .map(|k| {
            let e = parity(k);
            let weight = binomial(n, k as u64) - binomial(n, k as u64 - 2);
            (one_pm(-1, 2 * k - 2 * e) * one_pm(-1, 2 * g - 2 * k + 2))
                .shift(k + 2 * e)
                .scale(&weight)
        })
        .sum();
    ratio(num, den)
}

/// Poincaré polynomial of the irreducible SU(2) representations `R0^irr`
/// (cohomology relative to the reducible locus).
pub fn psu_irr_poly(p: GenusParams) -> Result<IntPolynomial> {
    let f = ab_equivariant_series(p) - reducible_equivariant_series(p) + primitive_sum(p);
    let poly = f.to_polynomial().map_err(Error::formula("P_t(R0^irr)"))?;
    check_betti("P_t(R0^irr)", poly)
}

/// Poincaré polynomial of `R0 = Hom(π, SU(2))/SU(2)`.
pub fn psu_poly(p: GenusParams) -> Result<IntPolynomial> {
    let two_g = 2 * p.genus();
    let irr = RationalFunction::from(psu_irr_poly(p)?);
    let reducible = ratio(
        (one_pm(1, 1).pow(two_g) + one_pm(-1, 1).pow(two_g)).shift(1),
        int(2),
    );
    let powers_of_ample = ratio(one_pm(-1, 2 * p.g() + 2), one_pm(-1, 1));
    let poly = (irr - reducible + powers_of_ample)
        .to_polynomial()
        .map_err(Error::formula("P_t(R0)"))?;
    check_betti("P_t(R0)", poly)
}

/// `P_t(X0) = P_t(R0) + C(t,g)`.
pub fn x0_poly(p: GenusParams) -> Result<IntPolynomial> {
    x0_poly_with(p, Tamper::None)
}

pub fn x0_poly_with(p: GenusParams, tamper: Tamper) -> Result<IntPolynomial> {
    Ok(psu_poly(p)? + c_poly_closed_with(p, tamper)?)
}

/// `P_t(X0^irr) = P_t(R0^irr) + C(t,g)`.
pub fn x0_irr_poly(p: GenusParams) -> Result<IntPolynomial> {
    Ok(psu_irr_poly(p)? + c_poly_closed(p)?)
}

/// SL(2,C)-equivariant Poincaré series of `Hom(π, SL(2,C))`: the
/// Atiyah-Bott series plus `C(t,g)`.
pub fn sl2c_equivariant_series(p: GenusParams) -> Result<RationalFunction> {
    sl2c_equivariant_series_with(p, Tamper::None)
}

pub fn sl2c_equivariant_series_with(p: GenusParams, tamper: Tamper) -> Result<RationalFunction> {
    Ok(ab_equivariant_series(p) + RationalFunction::from(c_poly_closed_with(p, tamper)?))
}

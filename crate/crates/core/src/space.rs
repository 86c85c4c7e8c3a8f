//! The spaces the engine knows, and the route that computes each one.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{IntPolynomial, RationalFunction};
use crate::error::Result;
use crate::formulas::{self, GenusParams, Tamper};
use crate::{strata, torelli};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceId {
    /// `R0 = Hom(π, SU(2))/SU(2)`
    R0,
    R0Irr,
    /// `X0 = Hom(π, SL(2,C)) // SL(2,C)`
    X0,
    X0Irr,
    /// SL(2,C)-equivariant cohomology of `Hom(π, SL(2,C))`
    X0Eq,
    /// GL(2,C)-equivariant cohomology, non-fixed determinant
    XEq,
    /// U(2)-equivariant cohomology, non-fixed determinant
    REq,
    /// GL(2,C) character variety, ordinary cohomology
    XOrd,
    /// U(2) representation variety, ordinary cohomology
    ROrd,
    /// Semistable bundles `N0(2,0)`
    N0,
    /// Even PSL(2,C) component `M0(2,0)/Γ₂`
    PslEven,
    /// Odd PSL(2,C) component: only Torelli flags are known.
    PslOdd,
    SymProd(usize),
    PrymCover(usize),
}

/// Value of a space's Poincaré generating function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceValue {
    Polynomial(IntPolynomial),
    /// Infinite series; must be truncated for display.
    Series(RationalFunction),
    /// Betti numbers are not available (only decomposition flags).
    Unavailable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseSpaceError(pub String);

impl fmt::Display for ParseSpaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown space '{}'", self.0)
    }
}

impl std::error::Error for ParseSpaceError {}

/// Names accepted on the command line, without the symmetric-product size.
pub const SPACE_NAMES: [&str; 14] = [
    "R0", "R0irr", "X0", "X0irr", "X0eq", "Xeq", "Req", "X", "R", "N0", "PSLeven", "PSLodd",
    "SymProd", "PrymCover",
];

impl SpaceId {
    /// Parse a space name; `n` is required for `SymProd` and `PrymCover`.
    pub fn parse(name: &str, n: Option<usize>) -> std::result::Result<Self, ParseSpaceError> {
        let lower = name.to_ascii_lowercase();
        let id = match lower.as_str() {
            "r0" => SpaceId::R0,
            "r0irr" => SpaceId::R0Irr,
            "x0" => SpaceId::X0,
            "x0irr" => SpaceId::X0Irr,
            "x0eq" => SpaceId::X0Eq,
            "xeq" => SpaceId::XEq,
            "req" => SpaceId::REq,
            "x" => SpaceId::XOrd,
            "r" => SpaceId::ROrd,
            "n0" => SpaceId::N0,
            "psleven" => SpaceId::PslEven,
            "pslodd" => SpaceId::PslOdd,
            "symprod" | "prymcover" => {
                let n = n.ok_or_else(|| ParseSpaceError(format!("{name} requires --n")))?;
                if lower == "symprod" {
                    SpaceId::SymProd(n)
                } else {
                    SpaceId::PrymCover(n)
                }
            }
            _ => return Err(ParseSpaceError(name.to_string())),
        };
        Ok(id)
    }

    pub fn label(&self) -> String {
        match self {
            SpaceId::R0 => "R0".into(),
            SpaceId::R0Irr => "R0irr".into(),
            SpaceId::X0 => "X0".into(),
            SpaceId::X0Irr => "X0irr".into(),
            SpaceId::X0Eq => "X0eq".into(),
            SpaceId::XEq => "Xeq".into(),
            SpaceId::REq => "Req".into(),
            SpaceId::XOrd => "X".into(),
            SpaceId::ROrd => "R".into(),
            SpaceId::N0 => "N0".into(),
            SpaceId::PslEven => "PSLeven".into(),
            SpaceId::PslOdd => "PSLodd".into(),
            SpaceId::SymProd(n) => format!("SymProd({n})"),
            SpaceId::PrymCover(n) => format!("PrymCover({n})"),
        }
    }

    pub fn is_series(&self) -> bool {
        matches!(self, SpaceId::X0Eq | SpaceId::XEq | SpaceId::REq)
    }

    pub fn compute(&self, p: GenusParams) -> Result<SpaceValue> {
        self.compute_with(p, Tamper::None)
    }

    pub fn compute_with(&self, p: GenusParams, tamper: Tamper) -> Result<SpaceValue> {
        use SpaceValue::{Polynomial, Series};
        Ok(match *self {
            SpaceId::R0 | SpaceId::N0 => Polynomial(formulas::psu_poly(p)?),
            SpaceId::R0Irr => Polynomial(formulas::psu_irr_poly(p)?),
            SpaceId::X0 => Polynomial(formulas::x0_poly_with(p, tamper)?),
            SpaceId::X0Irr => Polynomial(
                formulas::psu_irr_poly(p)? + formulas::c_poly_closed_with(p, tamper)?,
            ),
            SpaceId::X0Eq => Series(formulas::sl2c_equivariant_series_with(p, tamper)?),
            SpaceId::XEq => Series(torelli::tensor_nonfixed_equivariant_with(p, tamper)?),
            SpaceId::REq => Series(torelli::tensor_nonfixed_equivariant_unitary(p)),
            SpaceId::XOrd => Polynomial(torelli::ordinary_nonfixed(p)?),
            SpaceId::ROrd => Polynomial(torelli::ordinary_nonfixed_bundles(p)?),
            SpaceId::PslEven => Polynomial(torelli::psl_even_poincare(p)?),
            SpaceId::PslOdd => SpaceValue::Unavailable,
            SpaceId::SymProd(n) => Polynomial(strata::sym_product_poincare(n, p)),
            SpaceId::PrymCover(n) => Polynomial(strata::prym_cover_poincare(n, p)),
        })
    }

    /// `(quantity, source)` pairs describing how the value is computed.
    pub fn provenance(&self) -> Vec<(String, String)> {
        let pair = |a: &str, b: &str| (a.to_string(), b.to_string());
        let c_term = pair(
            "C(t,g)",
            "closed-form correction term, certified polynomial; equals the Morse-Bott stratum sum",
        );
        let psu = pair(
            "P_t(R0)",
            "Cappell-Lee-Miller formula: P_t(R0^irr) - t((1+t)^{2g}+(1-t)^{2g})/2 + (1-t^{2g+2})/(1-t)",
        );
        let psu_irr = pair(
            "P_t(R0^irr)",
            "Atiyah-Bott series minus reducible series plus primitive-class sum",
        );
        let ab = pair(
            "P_t^G0(A0^ss)",
            "Atiyah-Bott series ((1+t^3)^{2g} - t^{2g+2}(1+t)^{2g})/((1-t^2)(1-t^4))",
        );
        let jac = pair("P_t(J0)", "(1+t)^{2g}");
        let bu1 = pair("P_t(BU(1))", "1/(1-t^2)");
        let macdonald = pair(
            "P_t(S^n M)",
            "coefficient of x^n in (1+xt)^{2g}/((1-x)(1-xt^2))",
        );
        let invariant_strata = pair(
            "Gamma2-invariant strata",
            "sum over d of t^{2mu_d} P_t(S^{2g-2-2d} M), mu_d = g-1+2d",
        );
        match self {
            SpaceId::R0 => vec![psu, psu_irr, ab],
            SpaceId::N0 => vec![
                pair("P_t(N0(2,0))", "Narasimhan-Seshadri: equals P_t(R0)"),
                psu,
                psu_irr,
                ab,
            ],
            SpaceId::R0Irr => vec![psu_irr, ab],
            SpaceId::X0 => vec![pair("P_t(X0)", "P_t(R0) + C(t,g)"), psu, c_term],
            SpaceId::X0Irr => vec![pair("P_t(X0^irr)", "P_t(R0^irr) + C(t,g)"), psu_irr, c_term],
            SpaceId::X0Eq => vec![
                pair("P_t^SL(2,C)(Hom(pi,SL(2,C)))", "P_t^G0(A0^ss) + C(t,g)"),
                ab,
                c_term,
            ],
            SpaceId::XEq => vec![
                pair(
                    "P_t^eq(X)",
                    "H_eq(X0)^Gamma2 (x) H(J0) (x) H(BU(1)); Prym summands in degrees 6g-6-q, q in S, removed",
                ),
                pair("P_t^SL(2,C)(Hom(pi,SL(2,C)))", "P_t^G0(A0^ss) + C(t,g)"),
                c_term,
                jac,
                bu1,
            ],
            SpaceId::REq => vec![
                pair("P_t^eq(R)", "H_eq(R0) (x) H(J0) (x) H(BU(1)); Gamma2 acts trivially"),
                ab,
                jac,
                bu1,
            ],
            SpaceId::XOrd => vec![
                pair("P_t(M(2,0))", "H(M0(2,0))^Gamma2 (x) H(J0)"),
                pair("P_t(M0(2,0))^Gamma2", "P_t(R0) + Gamma2-invariant strata"),
                psu,
                invariant_strata,
                jac,
            ],
            SpaceId::ROrd => vec![pair("P_t(N(2,0))", "H(N0(2,0)) (x) H(J0)"), psu, jac],
            SpaceId::PslEven => vec![
                pair(
                    "P_t(X_e)",
                    "M0(2,0)/Gamma2: Gamma2-invariant cohomology, assuming a Gamma2-equivariant perfect stratification",
                ),
                psu,
                invariant_strata,
                macdonald,
            ],
            SpaceId::PslOdd => vec![pair(
                "Torelli flags (odd)",
                "Prym multiplicities (2^{2g}-1) C(2g-2,q) at degree 6g-6-q, q odd",
            )],
            SpaceId::SymProd(_) => vec![macdonald],
            SpaceId::PrymCover(_) => vec![
                pair("P_t(S~^n M)", "P_t(S^n M) + (2^{2g}-1) C(2g-2,n) t^n"),
                macdonald,
            ],
        }
    }
}

impl FromStr for SpaceId {
    type Err = ParseSpaceError;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        SpaceId::parse(s, None)
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!(SpaceId::parse("X0", None), Ok(SpaceId::X0));
        assert_eq!(SpaceId::parse("x0eq", None), Ok(SpaceId::X0Eq));
        assert_eq!(SpaceId::parse("SymProd", Some(2)), Ok(SpaceId::SymProd(2)));
        assert!(SpaceId::parse("SymProd", None).is_err());
        assert!(SpaceId::parse("Y", None).is_err());
        for name in SPACE_NAMES {
            assert!(SpaceId::parse(name, Some(1)).is_ok(), "{name}");
        }
    }

    #[test]
    fn every_space_has_provenance_and_a_route() {
        let g = GenusParams::new(3).unwrap();
        for name in SPACE_NAMES {
            let id = SpaceId::parse(name, Some(2)).unwrap();
            assert!(!id.provenance().is_empty());
            let value = id.compute(g).unwrap();
            assert_eq!(matches!(value, SpaceValue::Series(_)), id.is_series());
        }
    }
}

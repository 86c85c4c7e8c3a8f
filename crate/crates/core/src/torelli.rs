//! Torelli-group decomposition data: Prym dimensions, the index sets where
//! the Prym representations appear, Kirwan-defect polynomials, the
//! per-degree decomposition tables, the non-fixed-determinant tensor
//! relations and the PSL(2,C) even component.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::{binomial, IntPolynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::formulas::{
    ab_equivariant_series, psu_poly, sl2c_equivariant_series_with, GenusParams, Tamper,
};
use crate::strata::gamma2_invariant_strata;

/// `dim V(q,γ) = dim Λ^q W_γ⁻ = C(2g-2, q)`.
pub fn prym_dim(q: usize, p: GenusParams) -> BigInt {
    binomial(2 * p.g() as u64 - 2, q as u64)
}

/// `S = {2, 4, …, 2g-4}`: even-degree splitting indices.
pub fn even_index_set(p: GenusParams) -> Vec<usize> {
    (1..=p.g() - 2).map(|j| 2 * j).collect()
}

/// `S̃ = {1, 3, …, 2g-3}`: odd-degree splitting indices.
pub fn odd_index_set(p: GenusParams) -> Vec<usize> {
    (1..=p.g() - 1).map(|j| 2 * j - 1).collect()
}

/// Total multiplicity `(2^{2g}-1)·C(2g-2, q)` of the nontrivial Prym
/// summands in degree `6g-6-q`.
fn prym_multiplicity(q: usize, p: GenusParams) -> BigInt {
    p.nontrivial_characters() * prym_dim(q, p)
}

/// `Σ_{q∈S} (2^{2g}-1) C(2g-2,q) t^{6g-6-q}`: the Prym column of the even
/// equivariant table as a polynomial.
pub fn prym_polynomial(p: GenusParams) -> IntPolynomial {
    even_index_set(p)
        .into_iter()
        .map(|q| IntPolynomial::monomial(prym_multiplicity(q, p), p.top_degree() - q))
        .sum()
}

/// Graded dimensions of the kernels obstructing Kirwan surjectivity, one
/// degree above each splitting degree: `Σ_{q∈S} (2^{2g}-1) C(2g-2,q) t^{6g-5-q}`.
pub fn kirwan_defect(p: GenusParams) -> IntPolynomial {
    prym_polynomial(p).shift(1)
}

/// One cohomological degree of a decomposition table.
///
/// `total` and `invariant` are `None` where the Betti number is not known
/// (the odd-degree table).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorelliRow {
    pub degree: usize,
    pub total: Option<BigInt>,
    pub invariant: Option<BigInt>,
    pub prym: BigInt,
    pub torelli_trivial: bool,
    pub prym_torelli_trivial: bool,
}

fn prym_at(degree: usize, indices: &[usize], p: GenusParams) -> BigInt {
    let top = p.top_degree();
    match top.checked_sub(degree) {
        Some(q) if indices.contains(&q) => prym_multiplicity(q, p),
        _ => BigInt::zero(),
    }
}

/// Decomposition of `H^*_eq(X0)` in degrees `0..=truncation`.
pub fn torelli_table_equivariant_even(p: GenusParams, truncation: usize) -> Result<Vec<TorelliRow>> {
    torelli_table_equivariant_even_with(p, truncation, Tamper::None)
}

pub fn torelli_table_equivariant_even_with(
    p: GenusParams,
    truncation: usize,
    tamper: Tamper,
) -> Result<Vec<TorelliRow>> {
    let totals = sl2c_equivariant_series_with(p, tamper)?
        .series(truncation)
        .map_err(Error::formula("SL(2,C)-equivariant series"))?;
    let indices = even_index_set(p);
    totals
        .dims()
        .iter()
        .enumerate()
        .map(|(degree, total)| {
            let prym = prym_at(degree, &indices, p);
            let invariant = total - &prym;
            if invariant.is_negative() {
                return Err(Error::InconsistentTable {
                    degree,
                    total: total.clone(),
                    prym,
                });
            }
            Ok(TorelliRow {
                degree,
                total: Some(total.clone()),
                invariant: Some(invariant),
                torelli_trivial: prym.is_zero(),
                prym,
                prym_torelli_trivial: true,
            })
        })
        .collect()
}

/// Prym column of the odd-degree table, degrees `0..=6g-6`.
///
/// Only the Prym multiplicities and the triviality flags are known; totals
/// are left as `None`.
pub fn torelli_table_odd(p: GenusParams) -> Vec<TorelliRow> {
    let indices = odd_index_set(p);
    (0..=p.top_degree())
        .map(|degree| {
            let prym = prym_at(degree, &indices, p);
            TorelliRow {
                degree,
                total: None,
                invariant: None,
                torelli_trivial: prym.is_zero(),
                prym,
                prym_torelli_trivial: true,
            }
        })
        .collect()
}

/// `H^*_eq(X) ≅ H^*_eq(X0)^{Γ₂} ⊗ H^*(J0) ⊗ H^*(BU(1))`.
pub fn tensor_nonfixed_equivariant(p: GenusParams) -> Result<RationalFunction> {
    tensor_nonfixed_equivariant_with(p, Tamper::None)
}

pub fn tensor_nonfixed_equivariant_with(p: GenusParams, tamper: Tamper) -> Result<RationalFunction> {
    let invariant = sl2c_equivariant_series_with(p, tamper)?
        - RationalFunction::from(prym_polynomial(p));
    Ok(invariant * jacobian_times_bu1(p))
}

/// `H^*_eq(R) ≅ H^*_eq(R0) ⊗ H^*(J0) ⊗ H^*(BU(1))`; `Γ₂` acts trivially on
/// the Atiyah-Bott series.
pub fn tensor_nonfixed_equivariant_unitary(p: GenusParams) -> RationalFunction {
    ab_equivariant_series(p) * jacobian_times_bu1(p)
}

/// `(1+t)^{2g} / (1-t²)`.
fn jacobian_times_bu1(p: GenusParams) -> RationalFunction {
    RationalFunction::new(jacobian(p), IntPolynomial::binomial_factor(-1, 2))
        .expect("nonzero denominator")
}

fn jacobian(p: GenusParams) -> IntPolynomial {
    IntPolynomial::binomial_factor(1, 1).pow(2 * p.genus())
}

/// Rational cohomology of the even PSL(2,C) component `M0(2,0)/Γ₂`: the
/// `Γ₂`-invariant part of `H^*(M0(2,0))`.
///
/// Assumes the perfect stratification is `Γ₂`-equivariant, so invariants can
/// be taken stratum by stratum; the minimum stratum contributes fully since
/// `Γ₂` acts trivially on `H^*(N0(2,0))`.
pub fn psl_even_poincare(p: GenusParams) -> Result<IntPolynomial> {
    Ok(psu_poly(p)? + gamma2_invariant_strata(p))
}

/// `H^*(M(2,0)) ≅ H^*(M0(2,0))^{Γ₂} ⊗ H^*(J0)`.
pub fn ordinary_nonfixed(p: GenusParams) -> Result<IntPolynomial> {
    Ok(psl_even_poincare(p)? * jacobian(p))
}

/// `H^*(N(2,0)) ≅ H^*(N0(2,0)) ⊗ H^*(J0)`.
pub fn ordinary_nonfixed_bundles(p: GenusParams) -> Result<IntPolynomial> {
    Ok(psu_poly(p)? * jacobian(p))
}

/// One row of the static table of Torelli actions (stated for `g > 3`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Table1Row {
    /// Plain-text label, e.g. `H*_eq(X0(π))`.
    pub label: &'static str,
    pub latex: &'static str,
    pub trivial: bool,
    pub reference: &'static str,
}

const TABLE1: [Table1Row; 12] = [
    Table1Row { label: "H*_eq(X(π))", latex: r"$H^\ast_{eq.}({\mathfrak X}(\pi))$", trivial: true, reference: "Prop. nonfixed determinant" },
    Table1Row { label: "H*_eq(R(π))", latex: r"$H^\ast_{eq.}({\mathfrak R}(\pi))$", trivial: true, reference: "Atiyah-Bott" },
    Table1Row { label: "H*(X(π))", latex: r"$H^\ast({\mathfrak X}(\pi))$", trivial: false, reference: "Prop. GL(2,C)" },
    Table1Row { label: "H*(R(π))", latex: r"$H^\ast({\mathfrak R}(\pi))$", trivial: false, reference: "Prop. GL(2,C)" },
    Table1Row { label: "H*_eq(X0(π))", latex: r"$H^\ast_{eq.}({\mathfrak X}_0(\pi))$", trivial: false, reference: "Thm. main (2)" },
    Table1Row { label: "H*_eq(R0(π))", latex: r"$H^\ast_{eq.}({\mathfrak R}_0(\pi))$", trivial: true, reference: "Atiyah-Bott" },
    Table1Row { label: "H*(X0(π))", latex: r"$H^\ast({\mathfrak X}_0(\pi))$", trivial: false, reference: "Cor. nontrivial" },
    Table1Row { label: "H*(R0(π))", latex: r"$H^\ast({\mathfrak R}_0(\pi))$", trivial: false, reference: "Cappell-Lee-Miller, Thm. 1.1" },
    Table1Row { label: "H*(X̂_o(π))", latex: r"$H^\ast(\widehat{\mathfrak X}_o(\pi))$", trivial: true, reference: "Cor. projective" },
    Table1Row { label: "H*(R̂_o(π))", latex: r"$H^\ast(\widehat{\mathfrak R}_o(\pi))$", trivial: true, reference: "Cor. projective" },
    Table1Row { label: "H*(X̂_e(π))", latex: r"$H^\ast(\widehat{\mathfrak X}_e(\pi))$", trivial: false, reference: "Cor. projective" },
    Table1Row { label: "H*(R̂_e(π))", latex: r"$H^\ast(\widehat{\mathfrak R}_e(\pi))$", trivial: false, reference: "Cor. projective" },
];

/// Whether the Torelli group acts trivially, for twelve cohomology groups of
/// SU(2), U(2), PU(2), SL(2,C), GL(2,C) and PSL(2,C) representation spaces.
pub fn torelli_action_table() -> &'static [Table1Row] {
    &TABLE1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn genus(g: i64) -> GenusParams {
        GenusParams::new(g).unwrap()
    }

    #[test]
    fn prym_dimensions() {
        assert_eq!(prym_dim(2, genus(3)), BigInt::from(6));
        assert_eq!(prym_dim(0, genus(7)), BigInt::from(1));
        assert_eq!(prym_dim(5, genus(3)), BigInt::zero());
    }

    #[test]
    fn index_sets() {
        assert!(even_index_set(genus(2)).is_empty());
        assert_eq!(even_index_set(genus(3)), vec![2]);
        assert_eq!(even_index_set(genus(5)), vec![2, 4, 6]);
        assert_eq!(odd_index_set(genus(2)), vec![1]);
        assert_eq!(odd_index_set(genus(3)), vec![1, 3]);
        assert_eq!(odd_index_set(genus(4)), vec![1, 3, 5]);
    }

    #[test]
    fn kirwan_defect_values() {
        assert!(kirwan_defect(genus(2)).is_zero());
        assert_eq!(kirwan_defect(genus(3)), IntPolynomial::monomial(378, 11));
        assert_eq!(kirwan_defect(genus(4)).support(), vec![15, 17]);
    }

    #[test]
    fn even_table_genus_three() {
        let rows = torelli_table_equivariant_even(genus(3), 12).unwrap();
        assert_eq!(rows.len(), 13);
        assert_eq!(rows[10].prym, BigInt::from(378));
        assert!(!rows[10].torelli_trivial);
        assert_eq!(rows[11].prym, BigInt::zero());
        assert!(rows[11].torelli_trivial);
        for r in &rows {
            assert_eq!(
                r.total.clone().unwrap(),
                r.invariant.clone().unwrap() + &r.prym
            );
            assert!(r.prym_torelli_trivial);
        }
    }

    #[test]
    fn even_table_genus_two_is_trivial() {
        let rows = torelli_table_equivariant_even(genus(2), 8).unwrap();
        assert!(rows.iter().all(|r| r.prym.is_zero() && r.torelli_trivial));
    }

    #[test]
    fn odd_table() {
        let rows = torelli_table_odd(genus(2));
        assert_eq!(rows.len(), 7);
        assert_eq!(rows[5].prym, BigInt::from(30));
        assert!(rows[6].prym.is_zero());
        assert!(rows.iter().all(|r| r.total.is_none()));
        let rows = torelli_table_odd(genus(3));
        assert_eq!(rows[9].prym, BigInt::from(252));
        assert_eq!(rows[11].prym, BigInt::from(63 * 4));
        assert!(rows[12].prym.is_zero());
    }

    #[test]
    fn tensor_relations() {
        let g = genus(2);
        let expected = sl2c_equivariant_series_with(g, Tamper::None).unwrap() * jacobian_times_bu1(g);
        assert_eq!(tensor_nonfixed_equivariant(g).unwrap(), expected);
        let s = tensor_nonfixed_equivariant(genus(3)).unwrap().series(12).unwrap();
        assert_eq!(s.dims()[0], BigInt::from(1));

        let x = ordinary_nonfixed(g).unwrap();
        let even = psl_even_poincare(g).unwrap();
        assert_eq!(x.coeff(0), BigInt::from(1));
        assert_eq!(x.degree(), Some(6 + 4));
        assert_eq!(x.coeff(1), even.coeff(1) + 4);
    }

    #[test]
    fn psl_even_genus_two() {
        let g = genus(2);
        assert_eq!(
            psl_even_poincare(g).unwrap(),
            psu_poly(g).unwrap() + IntPolynomial::monomial(1, 6)
        );
    }

    #[test]
    fn table1_rows() {
        let t = torelli_action_table();
        assert_eq!(t.len(), 12);
        let find = |label: &str| t.iter().find(|r| r.label == label).unwrap();
        assert!(!find("H*_eq(X0(π))").trivial);
        assert!(find("H*_eq(R0(π))").trivial);
        assert!(find("H*(X̂_o(π))").trivial);
        let yes = t.iter().filter(|r| r.trivial).count();
        assert_eq!(yes, 5);
    }
}

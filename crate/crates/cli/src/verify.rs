//! The oracle suite behind `charvar verify`.

use charvar_core::formulas::{
    c_poly_closed_with, psu_irr_poly, psu_poly, sl2c_equivariant_series_with, x0_poly_with,
};
use charvar_core::strata::{c_poly_strata, m0_poincare_via_strata, prym_cover_poincare, sym_product_poincare};
use charvar_core::torelli::{
    kirwan_defect, odd_index_set, prym_polynomial, tensor_nonfixed_equivariant_with,
    torelli_table_equivariant_even_with, torelli_table_odd,
};
use charvar_core::{Error, GenusParams, IntPolynomial, Tamper};
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub genus: u32,
    pub check: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

type CheckResult = Result<(), String>;

fn describe(e: &Error) -> String {
    format!("{} ({e})", e.kind())
}

fn first_mismatch(a: &IntPolynomial, b: &IntPolynomial) -> Option<usize> {
    let len = a.coeffs().len().max(b.coeffs().len());
    (0..len).find(|&i| a.coeff(i) != b.coeff(i))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn closed_form_equals_strata(p: GenusParams, tamper: Tamper) -> CheckResult {
    let closed = c_poly_closed_with(p, tamper).map_err(|e| describe(&e))?;
    let strata = c_poly_strata(p);
    match first_mismatch(&closed, &strata) {
        None => Ok(()),
        Some(d) => Err(format!(
            "C(t,g) closed form and stratum sum differ first at degree {d}: {} vs {}",
            closed.coeff(d),
            strata.coeff(d)
        )),
    }
}

fn polynomiality_nonnegativity(p: GenusParams, tamper: Tamper) -> CheckResult {
    let polys = [
        ("C(t,g)", c_poly_closed_with(p, tamper)),
        ("P_t(R0)", psu_poly(p)),
        ("P_t(R0^irr)", psu_irr_poly(p)),
        ("P_t(X0)", x0_poly_with(p, tamper)),
    ];
    for (name, poly) in polys {
        let poly = poly.map_err(|e| describe(&e))?;
        if let Some(d) = poly.first_negative() {
            return Err(format!("{name} has a negative coefficient at degree {d}"));
        }
    }
    Ok(())
}

fn degree_and_leading_laws(p: GenusParams, tamper: Tamper) -> CheckResult {
    let top = p.top_degree();
    let c = c_poly_closed_with(p, tamper).map_err(|e| describe(&e))?;
    let psu = psu_poly(p).map_err(|e| describe(&e))?;
    let x0 = x0_poly_with(p, tamper).map_err(|e| describe(&e))?;
    for (name, poly) in [("C(t,g)", &c), ("P_t(R0)", &psu), ("P_t(X0)", &x0)] {
        ensure(poly.degree() == Some(top), || {
            format!("deg {name} = {:?}, expected {top}", poly.degree())
        })?;
    }
    let expected = p.gamma2_order() + BigInt::from(p.genus()) - 2;
    ensure(c.leading_coeff() == Some(&expected), || {
        format!("leading coefficient of C(t,g) is {:?}, expected {expected}", c.leading_coeff())
    })
}

fn additivity(p: GenusParams, tamper: Tamper) -> CheckResult {
    let psu = psu_poly(p).map_err(|e| describe(&e))?;
    let c = c_poly_closed_with(p, tamper).map_err(|e| describe(&e))?;
    let x0 = x0_poly_with(p, tamper).map_err(|e| describe(&e))?;
    let sum = &psu + &c;
    if let Some(d) = first_mismatch(&x0, &sum) {
        return Err(format!("P_t(X0) != P_t(R0) + C(t,g) at degree {d}"));
    }
    let minus_one = BigInt::from(-1);
    ensure(
        x0.eval(&minus_one) == psu.eval(&minus_one) + c.eval(&minus_one),
        || "Euler characteristics are not additive".into(),
    )?;
    let via_strata = m0_poincare_via_strata(p).map_err(|e| describe(&e))?;
    match first_mismatch(&x0, &via_strata) {
        None => Ok(()),
        Some(d) => Err(format!("P_t(X0) and the stratum sum for M0(2,0) differ at degree {d}")),
    }
}

fn palindromic_symmetric_products(p: GenusParams) -> CheckResult {
    for n in 0..=(2 * p.genus() as usize - 2) {
        for (name, poly) in [
            ("S^n M", sym_product_poincare(n, p)),
            ("S~^n M", prym_cover_poincare(n, p)),
        ] {
            if let Some(d) = first_mismatch(&poly, &poly.reflect(2 * n)) {
                return Err(format!("P_t({name}) at n = {n} is not palindromic at degree {d}"));
            }
        }
    }
    Ok(())
}

fn table_consistency(p: GenusParams, tamper: Tamper) -> CheckResult {
    let truncation = p.top_degree().max(4 * p.genus() as usize);
    let rows = torelli_table_equivariant_even_with(p, truncation, tamper).map_err(|e| describe(&e))?;
    for r in &rows {
        let (Some(total), Some(invariant)) = (&r.total, &r.invariant) else {
            return Err(format!("missing total at degree {}", r.degree));
        };
        ensure(*total == invariant + &r.prym, || {
            format!("total != invariant + prym at degree {}", r.degree)
        })?;
    }
    let column = IntPolynomial::new(rows.iter().map(|r| r.prym.clone()).collect());
    ensure(column.shift(1) == kirwan_defect(p), || {
        "Kirwan defect is not the Prym column shifted by one degree".into()
    })?;
    ensure(column == prym_polynomial(p), || "Prym column mismatch".into())?;
    ensure(kirwan_defect(p).is_zero() == (p.genus() == 2), || {
        "Kirwan defect vanishes at the wrong genus".into()
    })?;
    let odd = torelli_table_odd(p);
    let indices = odd_index_set(p);
    for r in &odd {
        let q = p.top_degree() - r.degree;
        ensure((r.prym != BigInt::from(0)) == indices.contains(&q), || {
            format!("odd table Prym entry misplaced at degree {}", r.degree)
        })?;
    }
    Ok(())
}

fn series_positivity(p: GenusParams, tamper: Tamper) -> CheckResult {
    let order = 4 * p.genus() as usize;
    let sl2c = sl2c_equivariant_series_with(p, tamper).map_err(|e| describe(&e))?;
    let tensor = tensor_nonfixed_equivariant_with(p, tamper).map_err(|e| describe(&e))?;
    for (name, f) in [("SL(2,C)-equivariant", sl2c), ("non-fixed determinant equivariant", tensor)] {
        let s = f.series(order).map_err(|e| format!("{} ({e})", e.kind()))?;
        if let Some(d) = s.first_negative() {
            return Err(format!("{name} series has a negative coefficient at degree {d}"));
        }
    }
    Ok(())
}

/// All checks for one genus, in a fixed order.
pub fn verify_genus(p: GenusParams, tamper: Tamper) -> Vec<CheckOutcome> {
    let checks: [(&'static str, CheckResult); 7] = [
        ("closed_form_equals_strata", closed_form_equals_strata(p, tamper)),
        ("polynomiality_nonnegativity", polynomiality_nonnegativity(p, tamper)),
        ("degree_leading_coefficient", degree_and_leading_laws(p, tamper)),
        ("additivity", additivity(p, tamper)),
        ("symmetric_product_palindromic", palindromic_symmetric_products(p)),
        ("table_consistency", table_consistency(p, tamper)),
        ("series_positivity", series_positivity(p, tamper)),
    ];
    checks
        .into_iter()
        .map(|(check, result)| CheckOutcome {
            genus: p.genus(),
            check,
            passed: result.is_ok(),
            detail: result.err(),
        })
        .collect()
}

//! Cross-module identities over a range of genera.

use charvar_core::formulas::{
    c_poly_closed, psu_irr_poly, psu_poly, sl2c_equivariant_series, x0_irr_poly, x0_poly,
};
use charvar_core::strata::{
    c_poly_strata, m0_poincare_via_strata, prym_cover_poincare, strata, sym_product_poincare,
};
use charvar_core::torelli::{
    even_index_set, kirwan_defect, odd_index_set, prym_polynomial, psl_even_poincare,
    tensor_nonfixed_equivariant, torelli_table_equivariant_even,
};
use charvar_core::{GenusParams, IntPolynomial};
use num_bigint::BigInt;

fn genera(max: i64) -> impl Iterator<Item = GenusParams> {
    (2..=max).map(|g| GenusParams::new(g).unwrap())
}

#[test]
fn closed_form_matches_stratum_sum() {
    for p in genera(12) {
        assert_eq!(c_poly_closed(p).unwrap(), c_poly_strata(p), "g = {}", p.genus());
    }
}

#[test]
fn betti_polynomials_are_nonnegative() {
    for p in genera(12) {
        for (name, poly) in [
            ("C", c_poly_closed(p).unwrap()),
            ("psu", psu_poly(p).unwrap()),
            ("psu_irr", psu_irr_poly(p).unwrap()),
            ("x0", x0_poly(p).unwrap()),
        ] {
            assert!(poly.is_nonnegative(), "{name} at g = {}", p.genus());
        }
    }
}

#[test]
fn degree_and_leading_coefficient_laws() {
    for p in genera(12) {
        let g = p.genus();
        let c = c_poly_closed(p).unwrap();
        assert_eq!(c.degree(), Some(p.top_degree()));
        assert_eq!(c.leading_coeff().unwrap(), &(p.gamma2_order() + BigInt::from(g) - 2));
        assert_eq!(psu_poly(p).unwrap().degree(), Some(p.top_degree()));
        assert_eq!(x0_poly(p).unwrap().degree(), Some(p.top_degree()));
    }
}

#[test]
fn additivity_and_euler_characteristic() {
    let minus_one = BigInt::from(-1);
    for p in genera(12) {
        let psu = psu_poly(p).unwrap();
        let c = c_poly_closed(p).unwrap();
        let x0 = x0_poly(p).unwrap();
        assert_eq!(x0, &psu + &c);
        assert_eq!(x0_irr_poly(p).unwrap(), psu_irr_poly(p).unwrap() + &c);
        assert_eq!(x0.eval(&minus_one), psu.eval(&minus_one) + c.eval(&minus_one));
        assert_eq!(m0_poincare_via_strata(p).unwrap(), x0);
    }
}

#[test]
fn symmetric_products_are_palindromic() {
    for p in genera(10) {
        for n in 0..=(2 * p.genus() as usize - 2) {
            let s = sym_product_poincare(n, p);
            assert_eq!(s.reflect(2 * n), s);
            let cover = prym_cover_poincare(n, p);
            assert_eq!(cover.reflect(2 * n), cover);
        }
    }
}

#[test]
fn stratum_terms_top_out_at_real_dimension() {
    for p in genera(12) {
        for s in strata(p) {
            let term = prym_cover_poincare(s.n, p).shift(s.index_shift());
            assert_eq!(term.degree(), Some(p.top_degree()));
        }
    }
}

#[test]
fn equivariant_series_are_nonnegative() {
    for p in genera(8) {
        let order = 4 * p.genus() as usize;
        let s = sl2c_equivariant_series(p).unwrap().series(order.max(20)).unwrap();
        assert_eq!(s.first_negative(), None);
        let t = tensor_nonfixed_equivariant(p).unwrap().series(order.max(20)).unwrap();
        assert_eq!(t.first_negative(), None);
    }
}

#[test]
fn kirwan_defect_and_index_sets() {
    for p in genera(12) {
        let g = p.genus() as usize;
        assert_eq!(kirwan_defect(p).is_zero(), g == 2);
        assert_eq!(kirwan_defect(p), prym_polynomial(p).shift(1));
        let even = even_index_set(p);
        let odd = odd_index_set(p);
        assert_eq!(even.len(), g - 2);
        assert_eq!(odd.len(), g - 1);
        assert!(even.iter().all(|q| !odd.contains(q)));
        let mut union: Vec<_> = even.iter().chain(&odd).copied().collect();
        union.sort();
        assert_eq!(union, (1..=2 * g - 3).collect::<Vec<_>>());
    }
}

#[test]
fn even_table_prym_column_is_the_prym_polynomial() {
    for p in genera(7) {
        let rows = torelli_table_equivariant_even(p, p.top_degree()).unwrap();
        let column = IntPolynomial::new(rows.iter().map(|r| r.prym.clone()).collect());
        assert_eq!(column, prym_polynomial(p));
    }
}

#[test]
fn psl_even_difference_sits_in_middle_degrees() {
    for p in genera(10) {
        let x0 = x0_poly(p).unwrap();
        let even = psl_even_poincare(p).unwrap();
        let diff = &x0 - &even;
        assert!(diff.is_nonnegative());
        let expected: Vec<usize> = {
            let mut v: Vec<_> = strata(p).map(|s| s.prym_degree()).collect();
            v.sort();
            v
        };
        assert_eq!(diff.support(), expected);
        // each sits at 6g-6-q with q even
        assert!(diff.support().iter().all(|d| (p.top_degree() - d) % 2 == 0));
    }
}

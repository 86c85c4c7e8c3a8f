//! Exact Poincaré polynomials, equivariant Poincaré series and Torelli
//! decomposition tables for the SL(2,C) character variety of a closed
//! surface of genus g ≥ 2, its SU(2) and PSL(2,C) relatives, and the
//! fixed-determinant rank-2 Higgs moduli space.
//!
//! The correction term `C(t,g)` is computed twice: once from its closed
//! form ([`formulas::c_poly_closed`]) and once from the Morse-Bott strata of
//! the Higgs moduli space ([`strata::c_poly_strata`]).

pub mod algebra;
mod error;
pub mod formulas;
pub mod space;
pub mod strata;
pub mod torelli;

pub use algebra::{
    binomial, series_expand, AlgebraError, DivisionFailure, GradedDims, IntPolynomial,
    RationalFunction,
};
pub use error::{Error, Result};
pub use formulas::{GenusParams, Tamper};
pub use space::{SpaceId, SpaceValue};
pub use torelli::TorelliRow;

//! Exact Bernoulli-polynomial analogues of Witten zeta values at non-positive
//! integers.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactalg`]: rationals, sparse multivariate polynomials, Bernoulli polynomials.
//! - [`series`]: truncated multivariate power series.
//! - [`rootsystems`]: root systems, positive roots and weight matrices.
//! - [`zetaspecial`]: special values of matrix-weighted zeta series and integrals.
//! - [`liepolys`]: the Lie-algebra polynomials `P` and `Q` and checks of their identities.

pub mod error;
pub mod exactalg;
pub mod liepolys;
pub mod rootsystems;
pub mod series;
pub mod zetaspecial;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/root-systems.md")]
    mod root_systems {}
    #[doc = include_str!("../../../book/src/special-values.md")]
    mod special_values {}
    #[doc = include_str!("../../../book/src/lie-polynomials.md")]
    mod lie_polynomials {}
}

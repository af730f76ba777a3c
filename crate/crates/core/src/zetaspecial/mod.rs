//! Special values at `s = −ℓ` of the zeta series
//! `ζ_{N,n}(s, w, M) = Σ_{k ∈ ℕ_0^N} Π_j (w_j + Σ_i k_i a_ij)^{−s}`
//! and of the zeta integral `𝒵_{N,n}` (the sum replaced by an integral over
//! `(0,∞)^N`).
//!
//! Both values are polynomials in `w`:
//!
//! ```text
//! (−1)^N (ℓ!)^n / (n(n−1)⋯(n−Z)) · Σ_γ Σ_{q=0}^{nℓ+N} (−1)^q w_{γ(1)}^{nℓ+N−q}/(nℓ+N−q)! · D^{(q)}(h_γ)
//! ```
//!
//! where `γ` runs over injections `{1..Z+1} → {1..n}`, `h_γ` is `g̃` (series)
//! or `g` (integral) built from `M^γ`, and `D^{(q)}` reads the Taylor
//! coefficient of `σ_1^q σ_2^{α_2} ⋯ σ_n^{α_n}`.
//!
//! ```
//! use wittenpoly::exactalg::{bernoulli_poly_in, Rational};
//! use wittenpoly::zetaspecial::{special_value, Kind, LinearFormVector, ZetaMatrix};
//!
//! let m = ZetaMatrix::from_integers(&[&[1]]).unwrap();
//! let w = LinearFormVector::generic(1);
//! let v = special_value(Kind::Series, 3, &w, &m, 0).unwrap();
//! assert_eq!(v, bernoulli_poly_in(4, "w1").scale(&Rational::new(-1, 4)));
//! ```

mod build;
mod eval;
mod injections;
mod matrix;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::Result;
use crate::exactalg::{MultiPoly, Rational};
use crate::series::extract_d;

pub use build::{alphas, build_g, build_gtilde, build_y, t_exponents, theorem_caps, y_factor_terms};
pub use injections::{enumerate_injections, injection_count, Completion, Injection};
pub use matrix::{
    parse_matrix_json, row_classes, validate_matrix, LinearFormVector, MatrixInput, RowClasses, ZetaMatrix,
};

/// Series (`ζ_{N,n}`) or integral (`𝒵_{N,n}`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Kind {
    Series,
    Integral,
}

/// Choices that must not change the value.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct EvalOptions {
    /// Defaults to `Z_M`.
    pub z: Option<usize>,
    pub completion: Completion,
}

/// The value at `s = −ℓ`, with `w` replaced by the given linear forms.
pub fn special_value(kind: Kind, ell: u32, w: &LinearFormVector, m: &ZetaMatrix, z: usize) -> Result<MultiPoly> {
    special_value_with(kind, ell, w, m, EvalOptions { z: Some(z), ..Default::default() })
}

pub fn special_value_with(
    kind: Kind,
    ell: u32,
    w: &LinearFormVector,
    m: &ZetaMatrix,
    opts: EvalOptions,
) -> Result<MultiPoly> {
    let generic = special_value_generic(kind, ell, m, opts)?;
    substitute_forms(&generic, w, m.n_cols())
}

/// The value as a polynomial in fresh variables `w1, …, wn`.
pub fn special_value_generic(kind: Kind, ell: u32, m: &ZetaMatrix, opts: EvalOptions) -> Result<MultiPoly> {
    let n = m.n_cols();
    let z = opts.z.unwrap_or(m.z_m());
    m.check_z(z)?;
    let total = n as u32 * ell + m.n_rows() as u32;
    let inv_fact: Vec<Rational> = (0..=total).map(|k| Rational::factorial(k).recip()).collect();
    let gammas: Vec<Injection> = enumerate_injections(n, z, opts.completion).collect();
    let parts: Vec<eval::WPoly> = gammas
        .par_iter()
        .map(|g| eval::gamma_term(kind, &m.permute_columns(&g.gamma), z, ell, &g.gamma, &inv_fact))
        .collect::<Result<_>>()?;
    let sum = tree_reduce(parts);
    let vars = generic_vars(n);
    let poly = MultiPoly::from_terms(&vars, sum).expect("distinct variable names");
    Ok(poly.scale(&prefactor(m, z, ell)))
}

/// `(−1)^N (ℓ!)^n / (n(n−1)⋯(n−Z))`.
fn prefactor(m: &ZetaMatrix, z: usize, ell: u32) -> Rational {
    let n = m.n_cols();
    let num = Rational::factorial(ell).pow(n as u32);
    let den = (0..=z).fold(Rational::one(), |acc, j| &acc * &Rational::from_integer((n - j) as i64));
    let v = &num / &den;
    if m.n_rows() % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Pairwise reduction in a fixed tree shape, independent of thread count.
fn tree_reduce(mut parts: Vec<eval::WPoly>) -> eval::WPoly {
    while parts.len() > 1 {
        let mut it = parts.into_iter();
        let mut pairs = Vec::new();
        while let Some(a) = it.next() {
            pairs.push((a, it.next()));
        }
        parts = pairs.into_par_iter().map(|(a, b)| match b {
            Some(b) => eval::merge(a, b),
            None => a,
        }).collect();
    }
    parts.pop().unwrap_or_default()
}

fn generic_vars(n: usize) -> Vec<String> {
    (1..=n).map(|j| format!("w{j}")).collect()
}

fn substitute_forms(p: &MultiPoly, w: &LinearFormVector, n: usize) -> Result<MultiPoly> {
    if w.len() != n {
        return Err(crate::error::Error::FormCount { got: w.len(), expected: n });
    }
    if w.is_generic() {
        return Ok(p.clone());
    }
    let bindings: BTreeMap<String, MultiPoly> = generic_vars(n).into_iter().zip(w.forms.iter().cloned()).collect();
    p.substitute(&bindings)
}

/// Same value computed by building `g` or `g̃` as series with polynomial
/// coefficients and extracting `D^{(q)}` directly. Much slower; used to
/// cross-check [`special_value`].
pub fn special_value_reference(
    kind: Kind,
    ell: u32,
    w: &LinearFormVector,
    m: &ZetaMatrix,
    opts: EvalOptions,
) -> Result<MultiPoly> {
    let n = m.n_cols();
    if w.len() != n {
        return Err(crate::error::Error::FormCount { got: w.len(), expected: n });
    }
    let z = opts.z.unwrap_or(m.z_m());
    m.check_z(z)?;
    let total = n as u32 * ell + m.n_rows() as u32;
    let mut sum = MultiPoly::zero();
    for g in enumerate_injections(n, z, opts.completion) {
        let mg = m.permute_columns(&g.gamma);
        let wg: Vec<MultiPoly> = g.gamma.iter().map(|&k| w.forms[k].clone()).collect();
        let caps = theorem_caps(&mg, z, ell)?;
        let h = match kind {
            Kind::Series => build_gtilde(&wg, &mg, z, &caps)?,
            Kind::Integral => build_g(&wg, &mg, z, &caps)?,
        };
        let alpha = &caps.caps()[1..];
        for q in 0..=total {
            let d = extract_d(q, alpha, &h)?;
            if d.is_zero() {
                continue;
            }
            let mut c = Rational::factorial(total - q).recip();
            if q % 2 == 1 {
                c = -c;
            }
            let t = wg[0].pow(total - q).mul_ref(&d);
            sum.add_scaled(&t, &c);
        }
    }
    Ok(sum.scale(&prefactor(m, z, ell)))
}

/// `Π_j w_j^ℓ`, the value for a matrix with no rows.
pub fn zeta_zero_case(ell: u32, w: &LinearFormVector) -> MultiPoly {
    w.forms.iter().fold(MultiPoly::one(), |acc, f| acc.mul_ref(&f.pow(ell)))
}

//! Exact scalar and polynomial arithmetic.
//!
//! [`Rational`] is the scalar everywhere; [`MultiPoly`] holds every polynomial
//! the crate produces. The free functions below are the polynomial functionals
//! used by the identity checks: forward differences, formal derivatives,
//! substitution and integration over the unit cube.

mod bernoulli;
mod poly;
mod rational;
mod text;

use std::collections::BTreeMap;

pub use bernoulli::{bernoulli_number, bernoulli_poly, bernoulli_poly_in, BernoulliCache};
pub use poly::{Monomial, MultiPoly};
pub use rational::Rational;
pub use text::{PolyJson, TermJson};

use crate::error::{Error, Result};

/// Composition `p(bindings)`; every variable occurring in `p` must be bound.
pub fn poly_substitute(p: &MultiPoly, bindings: &BTreeMap<String, MultiPoly>) -> Result<MultiPoly> {
    p.substitute(bindings)
}

fn index_of(p: &MultiPoly, var: &str) -> Result<usize> {
    p.var_index(var).ok_or_else(|| Error::UnknownVariable(var.to_string()))
}

/// `p(x + e_k) − p(x)` for the ambient variable at index `k`.
pub fn difference_op(p: &MultiPoly, k: usize) -> MultiPoly {
    p.difference(k)
}

/// Forward difference in a named variable. A variable absent from `p`
/// yields zero.
pub fn difference_in(p: &MultiPoly, var: &str) -> MultiPoly {
    match p.var_index(var) {
        Some(k) => p.difference(k),
        None => p.scale(&Rational::zero()),
    }
}

pub fn partial_derivative(p: &MultiPoly, k: usize) -> MultiPoly {
    p.partial_derivative(k)
}

pub fn partial_derivative_in(p: &MultiPoly, var: &str) -> MultiPoly {
    match p.var_index(var) {
        Some(k) => p.partial_derivative(k),
        None => p.scale(&Rational::zero()),
    }
}

/// `∫_{[0,1]^{over}} p` over the listed variables; the others are untouched
/// and the ambient list is unchanged. Variables not present in `p` integrate
/// to a factor of one.
pub fn unit_cube_integral(p: &MultiPoly, over: &[&str]) -> MultiPoly {
    let mut acc = p.clone();
    for var in over {
        if let Ok(k) = index_of(&acc, var) {
            let a = acc.antiderivative(k);
            acc = a.evaluate_var(k, &Rational::one()) - a.evaluate_var(k, &Rational::zero());
        }
    }
    acc
}

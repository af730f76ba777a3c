use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{bernoulli_poly_in, MultiPoly, Rational};

use super::{LieKind, LiePolynomial};

/// `Σ_L a_L Π_i B_{L_i}(x_i)`.
#[derive(Clone, PartialEq, Debug)]
pub struct BernoulliExpansion {
    vars: Vec<String>,
    coeffs: BTreeMap<Vec<u32>, Rational>,
}

impl BernoulliExpansion {
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn coefficient(&self, l: &[u32]) -> Rational {
        self.coeffs.get(l).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(L, a_L)` pairs in descending graded-lex order of `L`.
    pub fn terms(&self) -> Vec<(Vec<u32>, Rational)> {
        self.monomial_poly().terms().map(|(m, c)| (m.exps().to_vec(), c.clone())).collect()
    }

    /// `Σ a_L x^L`: the same coefficients on the monomial basis.
    pub fn monomial_poly(&self) -> MultiPoly {
        MultiPoly::from_terms(&self.vars, self.coeffs.iter().map(|(l, c)| (l.clone(), c.clone())))
            .expect("distinct variable names")
    }

    /// Expands back to the monomial basis.
    pub fn to_poly(&self) -> MultiPoly {
        let mut out = MultiPoly::zero_in(&self.vars);
        for (l, c) in &self.coeffs {
            out.add_scaled(&bernoulli_product(&self.vars, l), c);
        }
        out
    }
}

impl fmt::Display for BernoulliExpansion {
    /// Same layout as polynomials, with `B{m}(x)` factors: `1/4*B2(x1) + B1(x1)*B1(x2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || l.iter().all(|&e| e == 0) {
                factors.push(a.to_string());
            }
            for (v, &e) in self.vars.iter().zip(l) {
                if e > 0 {
                    factors.push(format!("B{e}({v})"));
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

fn bernoulli_product(vars: &[String], l: &[u32]) -> MultiPoly {
    vars.iter()
        .zip(l)
        .fold(MultiPoly::one(), |acc, (v, &e)| acc.mul_ref(&bernoulli_poly_in(e as usize, v)))
}

/// Rewrites `p` in the basis `Π B_{L_i}(x_i)`.
///
/// `B_m(x) = x^m + lower terms`, so subtracting the leading term's Bernoulli
/// product strictly lowers the leading monomial.
pub fn bernoulli_expansion(p: &MultiPoly) -> BernoulliExpansion {
    let vars = p.vars().to_vec();
    let mut rem = p.clone();
    let mut coeffs = BTreeMap::new();
    while let Some((m, c)) = rem.leading_term() {
        let l = m.exps().to_vec();
        let c = c.clone();
        rem.add_scaled(&bernoulli_product(&vars, &l), &-&c);
        coeffs.insert(l, c);
    }
    BernoulliExpansion { vars, coeffs }
}

/// The expansion of a `P` polynomial; every `L` must have `|L| = nℓ + r`.
pub fn to_bernoulli_expansion(p: &LiePolynomial) -> Result<BernoulliExpansion> {
    if p.kind != LieKind::P {
        return Err(Error::OutsideSpan("expansion is defined for P polynomials".into()));
    }
    let e = bernoulli_expansion(&p.poly);
    let d = p.expected_degree();
    if let Some((l, _)) = e.coeffs.iter().find(|(l, _)| l.iter().sum::<u32>() != d) {
        return Err(Error::OutsideSpan(format!("index {l:?} has total degree other than {d}")));
    }
    Ok(e)
}

/// `∫_{[0,1]^k} p(x + t) dt` over the listed variables.
pub fn raabe_transform(p: &MultiPoly, vars: &[&str]) -> MultiPoly {
    let mut out = p.clone();
    for v in vars {
        if let Some(k) = out.var_index(v) {
            // ∫_0^1 f(x + t) dt = F(x + 1) − F(x)
            out = out.antiderivative(k).difference(k);
        }
    }
    out
}

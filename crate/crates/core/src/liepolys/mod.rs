//! The polynomials `P_{ℓ,g}` and `Q_{ℓ,g}`: values at `s = −ℓ` of the
//! Witten–Hurwitz zeta series `Σ_{m ∈ ℕ_0^r} Π_{α>0} (Σ_i (x_i + m_i)(λ_i, α^∨))^{−s}`
//! and of its integral analogue.
//!
//! ```
//! use wittenpoly::liepolys::{compute_p, to_bernoulli_expansion};
//! use wittenpoly::rootsystems::build_root_system;
//!
//! let a2 = build_root_system("A2").unwrap();
//! let p = compute_p(&a2, 0).unwrap();
//! assert_eq!(to_bernoulli_expansion(&p).unwrap().to_string(), "1/4*B2(x1) + B1(x1)*B1(x2) + 1/4*B2(x2)");
//! ```

mod basis;
mod checks;

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{bernoulli_poly_in, MultiPoly, Rational};
use crate::rootsystems::{weight_matrix, Label, RootSystem};
use crate::zetaspecial::{injection_count, special_value_with, Completion, EvalOptions, Kind, LinearFormVector, ZetaMatrix};

pub use basis::{bernoulli_expansion, raabe_transform, to_bernoulli_expansion, BernoulliExpansion};
pub use checks::{check_product, check_theorem1, CheckResult, CheckStatus, Report};

/// Injection counts above this need an explicit override.
pub const FEASIBILITY_LIMIT: u128 = 1_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LieKind {
    P,
    Q,
}

impl LieKind {
    pub fn zeta_kind(self) -> Kind {
        match self {
            LieKind::P => Kind::Series,
            LieKind::Q => Kind::Integral,
        }
    }
}

impl fmt::Display for LieKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieKind::P => "P",
            LieKind::Q => "Q",
        })
    }
}

/// `P_{ℓ,g}` or `Q_{ℓ,g}` in variables `x1, …, xr`.
#[derive(Clone, PartialEq, Debug)]
pub struct LiePolynomial {
    pub algebra: Label,
    pub ell: u32,
    pub kind: LieKind,
    pub poly: MultiPoly,
    /// Number of positive roots.
    pub n: usize,
    pub r: usize,
}

impl LiePolynomial {
    /// `nℓ + r`.
    pub fn expected_degree(&self) -> u32 {
        self.n as u32 * self.ell + self.r as u32
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ComputeOptions {
    /// Skip the feasibility guard.
    pub force: bool,
    pub z: Option<usize>,
    pub completion: Completion,
}

/// The zeta matrix `(λ_i, α^∨)` of a root system.
pub fn lie_matrix(rs: &RootSystem) -> ZetaMatrix {
    ZetaMatrix::from_weight_matrix(&weight_matrix(rs))
}

/// Estimated injection count for `rs` at the default `Z`.
pub fn feasibility_estimate(rs: &RootSystem) -> u128 {
    let m = lie_matrix(rs);
    injection_count(m.n_cols(), m.z_m())
}

pub fn compute(rs: &RootSystem, ell: u32, kind: LieKind, opts: ComputeOptions) -> Result<LiePolynomial> {
    let m = lie_matrix(rs);
    let z = opts.z.unwrap_or(m.z_m());
    let estimate = injection_count(m.n_cols(), z);
    if estimate > FEASIBILITY_LIMIT && !opts.force {
        return Err(Error::Infeasible { estimate, limit: FEASIBILITY_LIMIT });
    }
    let w = LinearFormVector::from_rows(&m);
    let eval = EvalOptions { z: Some(z), completion: opts.completion };
    let poly = special_value_with(kind.zeta_kind(), ell, &w, &m, eval)?;
    Ok(LiePolynomial { algebra: rs.label.clone(), ell, kind, poly, n: rs.n_positive(), r: rs.rank })
}

pub fn compute_p(rs: &RootSystem, ell: u32) -> Result<LiePolynomial> {
    compute(rs, ell, LieKind::P, ComputeOptions::default())
}

pub fn compute_q(rs: &RootSystem, ell: u32) -> Result<LiePolynomial> {
    compute(rs, ell, LieKind::Q, ComputeOptions::default())
}

/// The conjectural closed form for `P_{ℓ,sl_3}`:
///
/// ```text
/// (ℓ!)² (B_{3ℓ+2}(x_1) + B_{3ℓ+2}(x_2)) / (2(−1)^ℓ (3ℓ+2)(2ℓ+1)!)
///   + Σ_{k=0}^{ℓ} C(ℓ,k) B_{2ℓ−k+1}(x_1) B_{ℓ+k+1}(x_2) / ((2ℓ−k+1)(ℓ+k+1))
/// ```
pub fn sl3_closed_formula(ell: u32) -> MultiPoly {
    let l = ell as i64;
    let b = |m: i64, v: &str| bernoulli_poly_in(m as usize, v);
    let mut lead = &Rational::factorial(ell).pow(2)
        / &(&Rational::from_integer(2 * (3 * l + 2)) * &Rational::factorial(2 * ell + 1));
    if ell % 2 == 1 {
        lead = -lead;
    }
    let mut out = b(3 * l + 2, "x1").add_ref(&b(3 * l + 2, "x2")).scale(&lead);
    for k in 0..=l {
        let c = &Rational::binomial(ell, k as u32) / &Rational::from_integer((2 * l - k + 1) * (l + k + 1));
        out.add_scaled(&b(2 * l - k + 1, "x1").mul_ref(&b(l + k + 1, "x2")), &c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystems::build_root_system;
    use crate::zetaspecial::special_value_reference;

    fn rs(label: &str) -> RootSystem {
        build_root_system(label).unwrap()
    }

    #[test]
    fn a1_case() {
        let a1 = rs("A1");
        for ell in 0..=5 {
            let p = compute_p(&a1, ell).unwrap();
            let expect = bernoulli_poly_in(ell as usize + 1, "x1").scale(&Rational::new(-1, ell as i64 + 1));
            assert_eq!(p.poly, expect);
            let q = compute_q(&a1, ell).unwrap();
            assert_eq!(q.poly, MultiPoly::var("x1").pow(ell + 1).scale(&Rational::new(-1, ell as i64 + 1)));
        }
    }

    #[test]
    fn small_examples() {
        let p = compute_p(&rs("A2"), 0).unwrap();
        assert_eq!(p.poly, sl3_closed_formula(0));
        assert_eq!(compute_q(&rs("A2"), 0).unwrap().poly, "1/4*x1^2 + x1*x2 + 1/4*x2^2".parse().unwrap());
        assert_eq!(compute_q(&rs("A1xA1"), 0).unwrap().poly, "x1*x2".parse().unwrap());
        let g2 = to_bernoulli_expansion(&compute_p(&rs("G2"), 0).unwrap()).unwrap();
        assert_eq!(g2.to_string(), "1/4*B2(x1) + B1(x1)*B1(x2) + 3/4*B2(x2)");
    }

    #[test]
    fn agrees_with_direct_substitution_path() {
        for (label, ell) in [("A2", 0), ("A2", 1), ("B2", 0), ("A1xA1", 1)] {
            let r = rs(label);
            let m = lie_matrix(&r);
            let w = LinearFormVector::from_rows(&m);
            for kind in [LieKind::P, LieKind::Q] {
                let direct = special_value_reference(kind.zeta_kind(), ell, &w, &m, EvalOptions::default()).unwrap();
                assert_eq!(compute(&r, ell, kind, ComputeOptions::default()).unwrap().poly, direct, "{label} {ell} {kind}");
            }
        }
    }

    #[test]
    fn type_a_diagram_symmetry() {
        // x_i ↔ x_{r+1−i} is the diagram automorphism of A_r.
        for (label, ell) in [("A2", 2), ("A3", 0), ("A3", 1)] {
            let r = rs(label);
            let p = compute_p(&r, ell).unwrap().poly;
            let rev: Vec<usize> = (0..r.rank).rev().collect();
            assert_eq!(p.permute_vars(&rev), p, "{label} {ell}");
        }
        let b2 = compute_p(&rs("B2"), 1).unwrap().poly;
        assert_ne!(b2.permute_vars(&[1, 0]), b2);
    }

    #[test]
    fn feasibility_guard() {
        let e8 = rs("E8");
        assert!(feasibility_estimate(&e8) > FEASIBILITY_LIMIT);
        assert!(matches!(compute_p(&e8, 0), Err(Error::Infeasible { .. })));
    }

    #[test]
    fn closed_formula_small() {
        let p1: MultiPoly = sl3_closed_formula(1);
        let e = bernoulli_expansion(&p1);
        assert_eq!(e.to_string(), "-1/60*B5(x1) + 1/6*B3(x1)*B2(x2) + 1/6*B2(x1)*B3(x2) - 1/60*B5(x2)");
    }
}

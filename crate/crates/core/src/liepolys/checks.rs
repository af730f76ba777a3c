use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::exactalg::{difference_in, partial_derivative_in, unit_cube_integral, MultiPoly, Rational};
use crate::rootsystems::{direct_sum, RootSystem};
use crate::zetaspecial::{zeta_zero_case, LinearFormVector};

use super::basis::{bernoulli_expansion, raabe_transform};
use super::{compute, lie_matrix, ComputeOptions, LieKind, LiePolynomial};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Report {
    pub title: String,
    pub results: Vec<CheckResult>,
}

impl Report {
    fn push(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        self.results.push(CheckResult { name: name.to_string(), status, detail: detail.into() });
    }

    fn skip(&mut self, name: &str, detail: impl Into<String>) {
        self.results.push(CheckResult { name: name.to_string(), status: CheckStatus::Skipped, detail: detail.into() });
    }

    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.results.iter().filter(|r| r.status == CheckStatus::Fail).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for r in &self.results {
            let tag = match r.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            if r.detail.is_empty() {
                writeln!(f, "  [{tag}] {}", r.name)?;
            } else {
                writeln!(f, "  [{tag}] {}: {}", r.name, r.detail)?;
            }
        }
        Ok(())
    }
}

fn xs(r: usize) -> Vec<String> {
    (1..=r).map(|i| format!("x{i}")).collect()
}

fn permutations(r: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                rec(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; r], &mut out);
    out
}

/// `x_i ↦ image(x_{perm[i]})` simultaneously.
fn relabel(p: &MultiPoly, perm: &[usize], image: impl Fn(&str) -> MultiPoly) -> MultiPoly {
    let names = xs(perm.len());
    let bindings: BTreeMap<String, MultiPoly> =
        names.iter().zip(perm).map(|(v, &k)| (v.clone(), image(&names[k]))).collect();
    p.substitute_some(&bindings)
}

/// Searches permutations beyond the identity for one satisfying `ok`.
fn find_permutation(r: usize, ok: impl Fn(&[usize]) -> bool) -> Option<Vec<usize>> {
    if r > 6 {
        return None;
    }
    permutations(r).into_iter().skip(1).find(|p| ok(p))
}

/// The identities satisfied by `P = P_{ℓ,g}` and `Q = Q_{ℓ,g}`.
pub fn check_theorem1(rs: &RootSystem, ell: u32, p: &LiePolynomial, q: &LiePolynomial) -> Report {
    let r = rs.rank;
    let d = rs.n_positive() as u32 * ell + r as u32;
    let vars = xs(r);
    let var_refs: Vec<&str> = vars.iter().map(String::as_str).collect();
    let mut rep = Report { title: format!("checks for {} at ell = {ell}", rs.label), results: Vec::new() };

    let forms = LinearFormVector::from_rows(&lie_matrix(rs));
    let mut rhs = zeta_zero_case(ell, &forms);
    if r % 2 == 1 {
        rhs = rhs.neg_ref();
    }
    let diffs = var_refs.iter().fold(p.poly.clone(), |acc, v| difference_in(&acc, v));
    rep.push("(iii) iterated differences of P", diffs == rhs, "");
    let derivs = var_refs.iter().fold(q.poly.clone(), |acc, v| partial_derivative_in(&acc, v));
    rep.push("(iii) mixed partial of Q", derivs == rhs, "");

    let sign = if d % 2 == 0 { Rational::one() } else { -Rational::one() };
    let target = p.poly.scale(&sign);
    let reflect = |perm: &[usize]| {
        relabel(&p.poly, perm, |v| MultiPoly::one() - MultiPoly::var(v)) == target
    };
    let identity: Vec<usize> = (0..r).collect();
    if reflect(&identity) {
        rep.push("(iv) reflection P(1 - x) = (-1)^(n*ell+r) P(x)", true, "");
    } else {
        let found = find_permutation(r, reflect);
        let detail = found.as_ref().map_or_else(|| "no variable permutation works".to_string(), |p| format!("holds after renumbering {p:?}"));
        rep.push("(iv) reflection P(1 - x) = (-1)^(n*ell+r) P(x)", found.is_some(), detail);
    }

    let exp = bernoulli_expansion(&p.poly);
    let degrees_ok = exp.terms().iter().all(|(l, _)| l.iter().sum::<u32>() == d);
    rep.push("(v) Bernoulli coefficients of P are the monomial coefficients of Q", degrees_ok && exp.monomial_poly() == q.poly, "");
    rep.push("(vi) Raabe transform of P is Q", raabe_transform(&p.poly, &var_refs) == q.poly, "");

    let deg_detail = format!("expected {d}, got P: {:?}, Q: {:?}", p.poly.total_degree(), q.poly.total_degree());
    rep.push("total degree n*ell + r", p.poly.total_degree() == Some(d) && q.poly.total_degree() == Some(d), deg_detail);
    rep.push("Q homogeneous", q.poly.is_homogeneous(d), "");
    rep.push("integral of P over the unit cube vanishes", unit_cube_integral(&p.poly, &var_refs).is_zero(), "");

    if ell >= 2 && ell % 2 == 0 {
        let at_one = p.poly.evaluate(&vec![Rational::one(); p.poly.nvars()]);
        rep.push("P(1, ..., 1) = 0 for even ell", at_one.is_zero(), format!("value {at_one}"));
    } else {
        rep.skip("P(1, ..., 1) = 0 for even ell", "needs even ell >= 2");
    }
    rep
}

/// Compares `P` and `Q` of `a ⊕ b` with the products of the factors.
pub fn check_product(a: &RootSystem, b: &RootSystem, ell: u32) -> Result<Report> {
    let sum = direct_sum(a, b);
    let ra = a.rank;
    let shift: BTreeMap<String, String> = (1..=b.rank).map(|j| (format!("x{j}"), format!("x{}", j + ra))).collect();
    let mut rep = Report { title: format!("product check {} x {} at ell = {ell}", a.label, b.label), results: Vec::new() };
    for kind in [LieKind::P, LieKind::Q] {
        let opts = ComputeOptions::default();
        let whole = compute(&sum, ell, kind, opts)?.poly;
        let pa = compute(a, ell, kind, opts)?.poly;
        let pb = compute(b, ell, kind, opts)?.poly.rename(&shift);
        let prod = pa.mul_ref(&pb);
        let name = format!("(ii) {kind} of the direct sum is the product");
        if whole == prod {
            rep.push(&name, true, "");
        } else {
            let found = find_permutation(ra + b.rank, |perm| relabel(&whole, perm, MultiPoly::var) == prod);
            let detail = found.as_ref().map_or_else(|| "no variable permutation works".to_string(), |p| format!("holds after renumbering {p:?}"));
            rep.push(&name, found.is_some(), detail);
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::bernoulli_poly_in;
    use crate::rootsystems::build_root_system;

    fn run(label: &str, ell: u32) -> Report {
        let rs = build_root_system(label).unwrap();
        let p = compute(&rs, ell, LieKind::P, ComputeOptions::default()).unwrap();
        let q = compute(&rs, ell, LieKind::Q, ComputeOptions::default()).unwrap();
        check_theorem1(&rs, ell, &p, &q)
    }

    #[test]
    fn suite_examples() {
        assert!(run("A2", 0).all_passed(), "{}", run("A2", 0));
        let a1 = run("A1", 5);
        assert!(a1.all_passed(), "{a1}");
        assert_eq!(a1.results.last().unwrap().status, CheckStatus::Skipped);
        let b2 = run("B2", 2);
        assert!(b2.all_passed(), "{b2}");
        assert_eq!(b2.results.last().unwrap().status, CheckStatus::Pass);
    }

    #[test]
    fn failing_input_is_reported() {
        let rs = build_root_system("A1").unwrap();
        let mut p = compute(&rs, 1, LieKind::P, ComputeOptions::default()).unwrap();
        let q = compute(&rs, 1, LieKind::Q, ComputeOptions::default()).unwrap();
        p.poly = p.poly.add_ref(&MultiPoly::var("x1"));
        let rep = check_theorem1(&rs, 1, &p, &q);
        assert!(!rep.all_passed());
        assert!(rep.to_string().contains("[FAIL]"));
    }

    #[test]
    fn products() {
        let a1 = build_root_system("A1").unwrap();
        let a2 = build_root_system("A2").unwrap();
        for ell in 0..=1 {
            assert!(check_product(&a1, &a1, ell).unwrap().all_passed());
        }
        assert!(check_product(&a1, &a2, 0).unwrap().all_passed());
        let sum = direct_sum(&a1, &a1);
        let p = compute(&sum, 1, LieKind::P, ComputeOptions::default()).unwrap().poly;
        let expect = bernoulli_poly_in(2, "x1").mul_ref(&bernoulli_poly_in(2, "x2")).scale(&Rational::new(1, 4));
        assert_eq!(p, expect);
        let p0 = compute(&sum, 0, LieKind::P, ComputeOptions::default()).unwrap().poly;
        assert_eq!(p0, bernoulli_poly_in(1, "x1").mul_ref(&bernoulli_poly_in(1, "x2")));
    }
}

//! Per-injection evaluation with rational series.
//!
//! Writing `T_j = σ_1 t_j(σ')`, the `w`-dependence of `g̃` is the factor
//! `exp(−σ_1 Σ_{j≥2} w_j t_j)`, whose `σ_1^b` coefficient expands into
//! monomials `Π w_j^{k_j}/k_j!` times `σ'^{Σ k_j e(t_j)}`. Everything else,
//! `Ψ = Φ/y`, has rational coefficients. So each `D^{(q)}` is a finite sum
//! over exponent vectors `k` of `Ψ` read at `(q − |k|, α − Σ k_j e(t_j))`,
//! and the whole `γ`-term is a polynomial in slot variables `u_1, …, u_n`
//! that are renamed to `w_{γ(1)}, …, w_{γ(n)}` afterwards.

use std::collections::HashMap;

use crate::error::Result;
use crate::exactalg::Rational;
use crate::series::{phi_coefficients, TruncatedSeries};

use super::build::{t_exponents, theorem_caps, y_factor_terms};
use super::matrix::{row_classes, ZetaMatrix};
use super::Kind;

/// Sparse polynomial in `w_1, …, w_n` keyed by exponent vector.
pub type WPoly = HashMap<Vec<u32>, Rational>;

pub fn merge(mut a: WPoly, b: WPoly) -> WPoly {
    if a.len() < b.len() {
        return merge(b, a);
    }
    for (e, c) in b {
        let slot = a.entry(e).or_insert_with(Rational::zero);
        *slot += &c;
    }
    a
}

/// `Ψ = Φ / y` over caps `(nℓ+N, α)`; `Φ = 1` for the integral kind.
fn psi(kind: Kind, m: &ZetaMatrix, z: usize, ell: u32) -> Result<TruncatedSeries<Rational>> {
    let n = m.n_cols();
    let caps = theorem_caps(m, z, ell)?;
    let k_cap = caps.caps()[0] as usize;
    let mut psi = TruncatedSeries::<Rational>::one(&caps);
    if kind == Kind::Series {
        let phi = phi_coefficients(k_cap);
        for i in 0..m.n_rows() {
            let l: Vec<(Vec<u32>, Rational)> = (0..n)
                .filter(|&k| !m.entry(i, k).is_zero())
                .map(|k| (t_exponents(n, z, k), m.entry(i, k).clone()))
                .collect();
            // Horner in X = σ_1 L_i: Σ_b φ_b X^b · Ψ.
            let mut acc = psi.scale(&phi[k_cap]);
            for b in (0..k_cap).rev() {
                acc = acc.mul_terms(&l);
                if !phi[b].is_zero() {
                    acc = acc.add(&psi.scale(&phi[b]))?;
                }
            }
            psi = acc;
        }
    }
    let classes = row_classes(m, z)?;
    for (j, rows) in classes.classes.iter().enumerate() {
        for &i in rows {
            psi = psi.div_terms(&y_factor_terms(m, z, i, j))?;
        }
    }
    Ok(psi)
}

/// The `γ`-term `Σ_q (−1)^q u_1^{K−q}/(K−q)! · D^{(q)}(h)` as a polynomial in
/// `w`, for the column-permuted matrix `m` and permutation `gamma`.
pub fn gamma_term(kind: Kind, m: &ZetaMatrix, z: usize, ell: u32, gamma: &[usize], inv_fact: &[Rational]) -> Result<WPoly> {
    let n = m.n_cols();
    let psi = psi(kind, m, z, ell)?;
    let caps = psi.caps().caps().to_vec();
    let k_total = caps[0];
    // e(t_j) restricted to σ' (index 0 of these vectors is σ_2).
    let slots: Vec<Vec<u32>> = (1..n).map(|j| t_exponents(n, z, j)[1..].to_vec()).collect();
    let mut out = WPoly::new();
    let mut k = vec![0u32; n - 1];
    let mut rem: Vec<u32> = caps[1..].to_vec();
    let mut idx = vec![0u32; n];
    walk(0, &slots, &mut k, &mut rem, &mut |k: &[u32], rem: &[u32]| {
        let b: u32 = k.iter().sum();
        if b > k_total {
            return;
        }
        let weight = k.iter().fold(Rational::one(), |acc, &kj| &acc * &inv_fact[kj as usize]);
        idx[1..].copy_from_slice(rem);
        for a in 0..=(k_total - b) {
            idx[0] = a;
            let c = psi.coefficient(&idx).expect("index within caps");
            if c.is_zero() {
                continue;
            }
            let u1 = k_total - a - b;
            let mut v = &(c * &weight) * &inv_fact[u1 as usize];
            if a % 2 == 1 {
                v = -v;
            }
            let mut e = vec![0u32; n];
            e[gamma[0]] = u1;
            for (j, &kj) in k.iter().enumerate() {
                e[gamma[j + 1]] = kj;
            }
            let slot = out.entry(e).or_insert_with(Rational::zero);
            *slot += &v;
        }
    });
    Ok(out)
}

/// Visits every `k ∈ ℕ^{n−1}` with `Σ k_j e(t_j) ≤ caps`, passing the remainder.
fn walk(j: usize, slots: &[Vec<u32>], k: &mut Vec<u32>, rem: &mut Vec<u32>, f: &mut impl FnMut(&[u32], &[u32])) {
    if j == slots.len() {
        f(k, rem);
        return;
    }
    let e = &slots[j];
    let max = e.iter().zip(rem.iter()).filter(|(&x, _)| x > 0).map(|(_, &r)| r).min().unwrap_or(0);
    for kj in 0..=max {
        k[j] = kj;
        if kj > 0 {
            for (r, &x) in rem.iter_mut().zip(e) {
                *r -= x;
            }
        }
        walk(j + 1, slots, k, rem, f);
    }
    for (r, &x) in rem.iter_mut().zip(e) {
        *r += x * max;
    }
    k[j] = 0;
}

//! The functions `y`, `g` and `g̃` as truncated series in `σ = (σ_1, …, σ_n)`.
//!
//! Column indices are 0-based here: column `Z` is the last one of the
//! injection head, and columns above `Z` are the completion.

use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, Rational};
use crate::series::{phi_coefficients, Coefficient, TruncCaps, TruncatedSeries};

use super::matrix::{row_classes, RowClasses, ZetaMatrix};

/// Exponent vector of `T_k` in `σ`: `σ_1⋯σ_k` inside the head, and
/// `σ_k·σ_1⋯σ_{Z+1}` beyond it.
pub fn t_exponents(n: usize, z: usize, k: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    for r in 0..=k.min(z) {
        e[r] = 1;
    }
    e[k] = 1;
    e
}

/// Terms of the factor of `y` contributed by row `i`, whose first nonzero column is `j`.
pub fn y_factor_terms(m: &ZetaMatrix, z: usize, i: usize, j: usize) -> Vec<(Vec<u32>, Rational)> {
    let n = m.n_cols();
    let mut out = vec![(vec![0; n], m.entry(i, j).clone())];
    for k in j + 1..n {
        let a = m.entry(i, k);
        if a.is_zero() {
            continue;
        }
        let mut e = vec![0; n];
        for r in j + 1..=k.min(z) {
            e[r] = 1;
        }
        if k > z {
            e[k] = 1;
        }
        out.push((e, a.clone()));
    }
    out
}

/// `α_2, …, α_n` for the matrix `m` (already column-permuted).
pub fn alphas(m: &ZetaMatrix, z: usize, ell: u32, classes: &RowClasses) -> Vec<u32> {
    let n = m.n_cols();
    (1..n)
        .map(|j| {
            if j <= z {
                let tail: usize = (j..=z).map(|k| classes.size(k)).sum();
                (n - j) as u32 * ell + tail as u32
            } else {
                ell
            }
        })
        .collect()
}

/// Caps `(nℓ+N, α_2, …, α_n)` for `m`.
pub fn theorem_caps(m: &ZetaMatrix, z: usize, ell: u32) -> Result<TruncCaps> {
    let classes = row_classes(m, z)?;
    let mut caps = vec![m.n_cols() as u32 * ell + m.n_rows() as u32];
    caps.extend(alphas(m, z, ell, &classes));
    Ok(TruncCaps::new(caps))
}

pub fn build_y<C: Coefficient>(m: &ZetaMatrix, z: usize, caps: &TruncCaps) -> Result<TruncatedSeries<C>> {
    let classes = row_classes(m, z)?;
    let mut y = TruncatedSeries::<C>::one(caps);
    for (j, rows) in classes.classes.iter().enumerate() {
        for &i in rows {
            let factor = TruncatedSeries::from_terms(
                caps,
                y_factor_terms(m, z, i, j).into_iter().map(|(e, c)| (e, C::from_rational(c))),
            );
            y = y.mul(&factor)?;
        }
    }
    Ok(y)
}

fn check_forms(w: &[MultiPoly], m: &ZetaMatrix) -> Result<()> {
    if w.len() != m.n_cols() {
        return Err(Error::FormCount { got: w.len(), expected: m.n_cols() });
    }
    Ok(())
}

/// `Π_{k≥2} exp(−w_k T_k) / y`. Only `w_2, …, w_n` enter.
pub fn build_g(w: &[MultiPoly], m: &ZetaMatrix, z: usize, caps: &TruncCaps) -> Result<TruncatedSeries<MultiPoly>> {
    check_forms(w, m)?;
    let n = m.n_cols();
    let mut num = TruncatedSeries::one(caps);
    for (k, wk) in w.iter().enumerate().skip(1) {
        let arg = TruncatedSeries::monomial(caps, &t_exponents(n, z, k), wk.neg_ref());
        num = num.mul(&arg.exp()?)?;
    }
    let y: TruncatedSeries<MultiPoly> = build_y(m, z, caps)?;
    num.mul(&y.inverse()?)
}

/// `g · Π_i φ(Σ_k a_ik T_k)`.
pub fn build_gtilde(w: &[MultiPoly], m: &ZetaMatrix, z: usize, caps: &TruncCaps) -> Result<TruncatedSeries<MultiPoly>> {
    let n = m.n_cols();
    let mut h = build_g(w, m, z, caps)?;
    let phi = phi_coefficients(caps.budget() as usize);
    for i in 0..m.n_rows() {
        let arg = TruncatedSeries::from_terms(
            caps,
            (0..n).map(|k| (t_exponents(n, z, k), MultiPoly::constant(m.entry(i, k).clone()))),
        );
        h = h.mul(&TruncatedSeries::compose_univariate(&phi, &arg)?)?;
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::extract_d;

    fn w(name: &str) -> MultiPoly {
        MultiPoly::var(name)
    }

    #[test]
    fn y_examples() {
        let m = ZetaMatrix::from_integers(&[&[1]]).unwrap();
        let caps = TruncCaps::new(vec![3]);
        assert_eq!(build_y::<Rational>(&m, 0, &caps).unwrap(), TruncatedSeries::one(&caps));

        let m = ZetaMatrix::from_integers(&[&[1, 1]]).unwrap();
        let caps = TruncCaps::new(vec![2, 3]);
        let y: TruncatedSeries<Rational> = build_y(&m, 0, &caps).unwrap();
        let expect = TruncatedSeries::one(&caps).add(&TruncatedSeries::variable(&caps, 1)).unwrap();
        assert_eq!(y, expect);

        let m = ZetaMatrix::from_integers(&[&[2, 0, 3], &[0, 5, 1]]).unwrap();
        let caps = theorem_caps(&m, 1, 1).unwrap();
        let y: TruncatedSeries<Rational> = build_y(&m, 1, &caps).unwrap();
        assert_eq!(*y.constant_term(), Rational::from_integer(10));
    }

    #[test]
    fn g_examples() {
        let m = ZetaMatrix::from_integers(&[&[1]]).unwrap();
        let caps = TruncCaps::new(vec![2]);
        assert_eq!(build_g(&[w("w1")], &m, 0, &caps).unwrap(), TruncatedSeries::one(&caps));

        // exp(−w2 σ1σ2)/(1 + σ2)
        let m = ZetaMatrix::from_integers(&[&[1, 1]]).unwrap();
        let caps = TruncCaps::new(vec![2, 2]);
        let g = build_g(&[w("w1"), w("w2")], &m, 0, &caps).unwrap();
        let w2 = w("w2");
        let expect = [
            ((0, 0), MultiPoly::one()),
            ((0, 1), -MultiPoly::one()),
            ((0, 2), MultiPoly::one()),
            ((1, 1), -w2.clone()),
            ((1, 2), w2.clone()),
            ((2, 2), (&w2 * &w2).scale(&Rational::new(1, 2))),
        ];
        for ((a, b), c) in expect {
            assert_eq!(*g.coefficient(&[a, b]).unwrap(), c, "σ1^{a} σ2^{b}");
        }
        assert_eq!(g.nnz(), 6);

        let m = ZetaMatrix::from_integers(&[&[2, 3]]).unwrap();
        let g = build_g(&[w("w1"), w("w2")], &m, 0, &caps).unwrap();
        assert_eq!(*g.constant_term(), MultiPoly::constant(Rational::new(1, 2)));
    }

    #[test]
    fn gtilde_examples() {
        let m = ZetaMatrix::from_integers(&[&[1]]).unwrap();
        let caps = TruncCaps::new(vec![4]);
        let h = build_gtilde(&[w("w1")], &m, 0, &caps).unwrap();
        let phi = phi_coefficients(4);
        for q in 0..=4 {
            assert_eq!(extract_d(q, &[], &h).unwrap(), MultiPoly::constant(phi[q as usize].clone()));
        }

        // exp(−w2σ1σ2)·φ(σ1 + σ1σ2)/(1 + σ2) at σ1σ2: −w2 + 1/2 − 1/2 + ... read off by hand.
        let m = ZetaMatrix::from_integers(&[&[1, 1]]).unwrap();
        let caps = TruncCaps::new(vec![2, 2]);
        let h = build_gtilde(&[w("w1"), w("w2")], &m, 0, &caps).unwrap();
        // φ(σ1(1+σ2)) = 1 + σ1(1+σ2)/2 + σ1²(1+σ2)²/12; divided by (1+σ2):
        // σ1 part: 1/2 (no σ2 dependence), so [σ1σ2] = −w2 from the exponential only.
        assert_eq!(*h.coefficient(&[1, 1]).unwrap(), -w("w2"));
        assert_eq!(*h.coefficient(&[1, 0]).unwrap(), MultiPoly::constant(Rational::new(1, 2)));
        // [σ1²σ2]: 1/12·(1+σ2) → 1/12, plus (−w2σ1σ2)(σ1/2) → −w2/2.
        let expect = MultiPoly::constant(Rational::new(1, 12)) - w("w2").scale(&Rational::new(1, 2));
        assert_eq!(*h.coefficient(&[2, 1]).unwrap(), expect);
    }

    #[test]
    fn caps_follow_row_classes() {
        let m = ZetaMatrix::from_integers(&[&[1, 0, 1], &[0, 1, 1]]).unwrap();
        // F_1 = {1}, F_2 = {2}: α_2 = 2ℓ + 1, α_3 = ℓ.
        assert_eq!(theorem_caps(&m, 1, 2).unwrap().caps(), &[8, 5, 2]);
        assert_eq!(theorem_caps(&m, 2, 2).unwrap().caps(), &[8, 5, 2]);
        let swapped = m.permute_columns(&[1, 0, 2]);
        assert_eq!(theorem_caps(&swapped, 1, 2).unwrap().caps(), &[8, 5, 2]);
        assert_eq!(t_exponents(4, 1, 3), vec![1, 1, 0, 1]);
        assert_eq!(t_exponents(4, 1, 1), vec![1, 1, 0, 0]);
    }
}

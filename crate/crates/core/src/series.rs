//! Truncated multivariate power series.
//!
//! A [`TruncatedSeries`] lives in the quotient of the power-series ring by all
//! monomials exceeding a fixed per-variable cap. Coefficients are dense and
//! indexed in mixed radix with the first variable most significant, so every
//! componentwise-smaller exponent has a smaller index.
//!
//! The coefficient ring is anything implementing [`Coefficient`]: plain
//! [`Rational`]s for the structural parts of the zeta evaluator and
//! [`MultiPoly`] when coefficients depend on symbolic parameters.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, Rational};

/// Ring operations the series engine needs from its coefficients.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    /// `self += a * b`.
    fn add_mul_assign(&mut self, a: &Self, b: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn from_rational(c: Rational) -> Self;
    /// `Some(c)` when the coefficient is the constant `c`.
    fn as_rational(&self) -> Option<Rational>;
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self += &(a * b);
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn from_rational(c: Rational) -> Self {
        c
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl Coefficient for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        self.add_scaled(other, &Rational::one());
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        self.add_scaled(&p, &Rational::one());
    }
    fn mul_ref(&self, other: &Self) -> Self {
        MultiPoly::mul_ref(self, other)
    }
    fn scale(&self, c: &Rational) -> Self {
        MultiPoly::scale(self, c)
    }
    fn from_rational(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
    fn as_rational(&self) -> Option<Rational> {
        self.as_constant()
    }
}

/// Per-variable maximum degrees.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruncCaps {
    caps: Vec<u32>,
    strides: Vec<usize>,
    len: usize,
}

impl TruncCaps {
    pub fn new(caps: Vec<u32>) -> Self {
        let mut strides = vec![1usize; caps.len()];
        for j in (0..caps.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * (caps[j + 1] as usize + 1);
        }
        let len = caps.iter().map(|&c| c as usize + 1).product();
        TruncCaps { caps, strides, len }
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn nvars(&self) -> usize {
        self.caps.len()
    }

    /// Number of coefficient slots.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Sum of the caps: no nonzero monomial has larger total degree.
    pub fn budget(&self) -> u32 {
        self.caps.iter().sum()
    }

    pub fn contains(&self, exps: &[u32]) -> bool {
        exps.len() == self.caps.len() && exps.iter().zip(&self.caps).all(|(e, c)| e <= c)
    }

    pub fn index(&self, exps: &[u32]) -> Option<usize> {
        self.contains(exps).then(|| exps.iter().zip(&self.strides).map(|(&e, &s)| e as usize * s).sum())
    }

    pub fn decode(&self, mut idx: usize) -> Vec<u32> {
        let mut out = vec![0; self.caps.len()];
        for (j, &s) in self.strides.iter().enumerate() {
            out[j] = (idx / s) as u32;
            idx %= s;
        }
        out
    }
}

/// A power series truncated at fixed per-variable caps.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<C: Coefficient> {
    caps: TruncCaps,
    coeffs: Vec<C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    pub fn zero(caps: &TruncCaps) -> Self {
        TruncatedSeries { caps: caps.clone(), coeffs: vec![C::zero(); caps.len()] }
    }

    pub fn constant(caps: &TruncCaps, c: C) -> Self {
        let mut s = Self::zero(caps);
        s.coeffs[0] = c;
        s
    }

    pub fn one(caps: &TruncCaps) -> Self {
        Self::constant(caps, C::one())
    }

    /// `c · σ^exps`, or zero when `exps` exceeds the caps.
    pub fn monomial(caps: &TruncCaps, exps: &[u32], c: C) -> Self {
        let mut s = Self::zero(caps);
        if let Some(i) = caps.index(exps) {
            s.coeffs[i] = c;
        }
        s
    }

    /// The series `σ_k`.
    pub fn variable(caps: &TruncCaps, k: usize) -> Self {
        let mut e = vec![0; caps.nvars()];
        e[k] = 1;
        Self::monomial(caps, &e, C::one())
    }

    /// Sums `(exponents, coefficient)` pairs, dropping those beyond the caps.
    pub fn from_terms(caps: &TruncCaps, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        let mut s = Self::zero(caps);
        for (e, c) in terms {
            if let Some(i) = caps.index(&e) {
                s.coeffs[i].add_assign_ref(&c);
            }
        }
        s
    }

    pub fn caps(&self) -> &TruncCaps {
        &self.caps
    }

    pub fn coefficient(&self, exps: &[u32]) -> Result<&C> {
        self.caps
            .index(exps)
            .map(|i| &self.coeffs[i])
            .ok_or_else(|| Error::IndexBeyondCaps { index: exps.to_vec(), caps: self.caps.caps.clone() })
    }

    pub fn constant_term(&self) -> &C {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero coefficients with their exponents, in index order.
    pub fn nonzero(&self) -> impl Iterator<Item = (Vec<u32>, &C)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (self.caps.decode(i), c))
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn check_caps(&self, other: &Self) -> Result<()> {
        if self.caps != other.caps {
            return Err(Error::CapMismatch(self.caps.caps.clone(), other.caps.caps.clone()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_caps(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                a.add_assign_ref(b);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries { caps: self.caps.clone(), coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Multiplies every coefficient by `c` (a scalar of the coefficient ring).
    pub fn mul_coefficient(&self, c: &C) -> Self {
        TruncatedSeries { caps: self.caps.clone(), coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect() }
    }

    fn nonzero_entries(&self) -> Vec<(usize, Vec<u32>)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| (i, self.caps.decode(i)))
            .collect()
    }

    /// Truncated product. Visits at most `nnz(self) · nnz(other)` pairs.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_caps(other)?;
        let caps = &self.caps;
        let mut out = Self::zero(caps);
        let bs = other.nonzero_entries();
        if bs.is_empty() {
            return Ok(out);
        }
        let lead_stride = caps.strides.first().copied().unwrap_or(1);
        for (ia, ea) in self.nonzero_entries() {
            let ca = &self.coeffs[ia];
            // Entries of `other` whose leading exponent fits lie below this index.
            let limit = (caps.caps[0] - ea[0] + 1) as usize * lead_stride;
            let end = bs.partition_point(|(ib, _)| *ib < limit);
            for (ib, eb) in &bs[..end] {
                if ea.iter().zip(eb).zip(&caps.caps).skip(1).all(|((a, b), c)| a + b <= *c) {
                    out.coeffs[ia + ib].add_mul_assign(ca, &other.coeffs[*ib]);
                }
            }
        }
        Ok(out)
    }

    /// The single coefficient of `self · other` at `exps`.
    pub fn product_coefficient(&self, other: &Self, exps: &[u32]) -> Result<C> {
        self.check_caps(other)?;
        let target = self
            .caps
            .index(exps)
            .ok_or_else(|| Error::IndexBeyondCaps { index: exps.to_vec(), caps: self.caps.caps.clone() })?;
        let mut acc = C::zero();
        for (ia, ea) in self.nonzero_entries() {
            if ea.iter().zip(exps).all(|(a, e)| a <= e) {
                let b = &other.coeffs[target - ia];
                if !b.is_zero() {
                    acc.add_mul_assign(&self.coeffs[ia], b);
                }
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one(&self.caps);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `Σ_k a^k / k!`, stopping once `a^k` vanishes under the caps.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::ExpOfUnit);
        }
        let mut sum = Self::one(&self.caps);
        let mut term = Self::one(&self.caps);
        let mut k = 1i64;
        loop {
            term = term.mul(self)?.scale(&Rational::new(1, k));
            if term.is_zero() {
                return Ok(sum);
            }
            sum = sum.add(&term)?;
            k += 1;
        }
    }

    /// Multiplicative inverse; the constant term must be a nonzero rational.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term().as_rational().filter(|c| !c.is_zero()).ok_or(Error::NotInvertible)?;
        let inv_c0 = c0.recip();
        let neg_inv = -&inv_c0;
        let caps = &self.caps;
        let mut out = Self::zero(caps);
        out.coeffs[0] = C::from_rational(inv_c0);
        let terms: Vec<(usize, Vec<u32>)> = self.nonzero_entries().into_iter().filter(|(i, _)| *i != 0).collect();
        for idx in 1..caps.len() {
            let e = caps.decode(idx);
            let mut s = C::zero();
            for (ia, ea) in &terms {
                if *ia > idx {
                    break;
                }
                if ea.iter().zip(&e).all(|(a, b)| a <= b) {
                    let r = &out.coeffs[idx - ia];
                    if !r.is_zero() {
                        s.add_mul_assign(&self.coeffs[*ia], r);
                    }
                }
            }
            out.coeffs[idx] = s.scale(&neg_inv);
        }
        Ok(out)
    }

    /// `Σ_k f_k · a^k` for a univariate series `f` given by its coefficients.
    pub fn compose_univariate(f: &[Rational], a: &Self) -> Result<Self> {
        if !a.constant_term().is_zero() {
            return Err(Error::ExpOfUnit);
        }
        let mut sum = Self::constant(&a.caps, C::from_rational(f.first().cloned().unwrap_or_else(Rational::zero)));
        let mut power = Self::one(&a.caps);
        let mut k = 1usize;
        loop {
            power = power.mul(a)?;
            if power.is_zero() {
                return Ok(sum);
            }
            if k >= f.len() {
                let mut required = k;
                let mut p = power;
                loop {
                    p = p.mul(a)?;
                    if p.is_zero() {
                        break;
                    }
                    required += 1;
                }
                return Err(Error::InsufficientOrder { given: f.len().saturating_sub(1), required });
            }
            if !f[k].is_zero() {
                sum = sum.add(&power.scale(&f[k]))?;
            }
            k += 1;
        }
    }

    /// `self · Σ c_t σ^t` for a short list of terms; terms beyond the caps are ignored.
    pub fn mul_terms(&self, terms: &[(Vec<u32>, C)]) -> Self {
        let caps = &self.caps;
        let mut out = Self::zero(caps);
        let terms: Vec<(usize, &Vec<u32>, &C)> =
            terms.iter().filter_map(|(e, c)| caps.index(e).map(|i| (i, e, c))).collect();
        for (ia, ea) in self.nonzero_entries() {
            for (it, et, ct) in &terms {
                if ea.iter().zip(et.iter()).zip(&caps.caps).all(|((a, b), c)| a + b <= *c) {
                    out.coeffs[ia + it].add_mul_assign(&self.coeffs[ia], ct);
                }
            }
        }
        out
    }

    /// `self / (c + Σ c_t σ^t)` where `c` is the nonzero constant among `terms`.
    pub fn div_terms(&self, terms: &[(Vec<u32>, Rational)]) -> Result<Self> {
        let caps = &self.caps;
        let c0 = terms
            .iter()
            .filter(|(e, _)| e.iter().all(|&x| x == 0))
            .fold(Rational::zero(), |acc, (_, c)| &acc + c);
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv = c0.recip();
        let rest: Vec<(usize, &Vec<u32>, Rational)> = terms
            .iter()
            .filter(|(e, c)| !c.is_zero() && e.iter().any(|&x| x != 0))
            .filter_map(|(e, c)| caps.index(e).map(|i| (i, e, -c)))
            .collect();
        let mut out = self.clone();
        for idx in 0..caps.len() {
            let e = caps.decode(idx);
            // out[e] = (self[e] − Σ c_t out[e − t]) / c0
            let mut s = out.coeffs[idx].clone();
            for (it, et, neg_ct) in &rest {
                if et.iter().zip(&e).all(|(a, b)| a <= b) {
                    let prev = &out.coeffs[idx - it];
                    if !prev.is_zero() {
                        s.add_assign_ref(&prev.scale(neg_ct));
                    }
                }
            }
            out.coeffs[idx] = s.scale(&inv);
        }
        Ok(out)
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries { caps: self.caps.clone(), coeffs: self.coeffs.iter().map(f).collect() }
    }
}

/// `a + b`; caps must match.
pub fn series_add<C: Coefficient>(a: &TruncatedSeries<C>, b: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    a.add(b)
}

/// `a · b` truncated; caps must match.
pub fn series_mul<C: Coefficient>(a: &TruncatedSeries<C>, b: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    a.mul(b)
}

pub fn series_exp<C: Coefficient>(a: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    a.exp()
}

pub fn series_inverse<C: Coefficient>(a: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    a.inverse()
}

pub fn compose_univariate<C: Coefficient>(f: &[Rational], a: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    TruncatedSeries::compose_univariate(f, a)
}

/// Taylor coefficient of `σ_1^q σ_2^{α_2} ⋯ σ_n^{α_n}` in `h`.
///
/// This equals the mixed partial derivative at the origin divided by
/// `q!·α_2!⋯α_n!`.
pub fn extract_d<C: Coefficient>(q: u32, alphas: &[u32], h: &TruncatedSeries<C>) -> Result<C> {
    let mut e = Vec::with_capacity(alphas.len() + 1);
    e.push(q);
    e.extend_from_slice(alphas);
    if e.len() != h.caps.nvars() {
        return Err(Error::Shape(format!("{} exponents for a series in {} variables", e.len(), h.caps.nvars())));
    }
    h.coefficient(&e).cloned()
}

/// Coefficients of `φ(z) = z/(1 − e^{−z})` through order `n`.
///
/// `φ(z) = Σ_k B_k(1) z^k / k!`: the `k = 1` coefficient is `+1/2` and all
/// other odd coefficients vanish.
pub fn phi_coefficients(n: usize) -> Vec<Rational> {
    (0..=n)
        .map(|k| {
            let b = crate::exactalg::bernoulli_number(k);
            let b1 = if k == 1 { -b } else { b };
            &b1 / &Rational::factorial(k as u32)
        })
        .collect()
}

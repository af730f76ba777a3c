//! Sparse multivariate polynomials over [`Rational`] in named variables.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::Rational;
use crate::error::{Error, Result};

/// Dense exponent vector, one entry per ambient variable.
///
/// Ordered graded-lexicographically: total degree first, then the exponent of
/// the first variable, then the second, and so on.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn new(exps: impl Into<Box<[u32]>>) -> Self {
        Monomial(exps.into())
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn product(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sort key placing `x1 < x2 < … < w1 < w2 < …` before any other name.
fn var_key(name: &str) -> (u8, u64, &str) {
    let class = match name.as_bytes().first() {
        Some(b'x') => 0,
        Some(b'w') => 1,
        _ => 2,
    };
    match name[1.min(name.len())..].parse::<u64>() {
        Ok(idx) if class < 2 => (class, idx, name),
        _ => (2, 0, name),
    }
}

pub(crate) fn cmp_vars(a: &str, b: &str) -> Ordering {
    var_key(a).cmp(&var_key(b))
}

/// A polynomial with rational coefficients.
///
/// The ambient variable list is kept sorted in the global order (see
/// [`cmp_vars`]); binary operations on polynomials with different variable
/// lists act on the union. Zero coefficients are never stored.
#[derive(Clone)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { vars: Arc::from(Vec::<String>::new()), terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MultiPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(0), c);
        }
        p
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(name: &str) -> Self {
        let mut p = MultiPoly { vars: Arc::from(vec![name.to_string()]), terms: BTreeMap::new() };
        p.terms.insert(Monomial::new(vec![1]), Rational::one());
        p
    }

    /// Zero polynomial over a given ambient list (sorted into global order).
    pub fn zero_in(vars: &[impl AsRef<str>]) -> Self {
        let mut names: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        names.sort_by(|a, b| cmp_vars(a, b));
        names.dedup();
        MultiPoly { vars: Arc::from(names), terms: BTreeMap::new() }
    }

    /// Builds from `(exponents, coefficient)` pairs over `vars`, in any order;
    /// repeated exponents are summed.
    pub fn from_terms<I>(vars: &[impl AsRef<str>], terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let names: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let mut order: Vec<usize> = (0..names.len()).collect();
        order.sort_by(|&a, &b| cmp_vars(&names[a], &names[b]));
        for w in order.windows(2) {
            if names[w[0]] == names[w[1]] {
                return Err(Error::Parse(format!("duplicate variable {}", names[w[0]])));
            }
        }
        let sorted: Vec<String> = order.iter().map(|&i| names[i].clone()).collect();
        let mut p = MultiPoly { vars: Arc::from(sorted), terms: BTreeMap::new() };
        for (exps, c) in terms {
            if exps.len() != names.len() {
                return Err(Error::Parse(format!(
                    "exponent vector of length {} for {} variables",
                    exps.len(),
                    names.len()
                )));
            }
            let m = Monomial(order.iter().map(|&i| exps[i]).collect());
            p.add_term(m, &c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(&Monomial(exps.into())).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of a monomial described by `(variable, exponent)` pairs.
    pub fn coefficient_of(&self, powers: &[(&str, u32)]) -> Rational {
        let mut exps = vec![0; self.nvars()];
        for (name, e) in powers {
            match self.var_index(name) {
                Some(i) => exps[i] += e,
                None if *e == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.coefficient(&exps)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.nvars()])
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, k: usize) -> u32 {
        self.terms.keys().map(|m| m.0[k]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    /// Variables that occur with positive exponent in some term.
    pub fn support_vars(&self) -> Vec<&str> {
        (0..self.nvars())
            .filter(|&k| self.terms.keys().any(|m| m.0[k] > 0))
            .map(|k| self.vars[k].as_str())
            .collect()
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Re-expresses `self` over a superset of its variables.
    pub fn embed(&self, vars: &[impl AsRef<str>]) -> Result<Self> {
        let target = MultiPoly::zero_in(vars);
        if *target.vars == *self.vars {
            return Ok(self.clone());
        }
        let map = self
            .vars
            .iter()
            .map(|v| target.var_index(v).ok_or_else(|| Error::UnknownVariable(v.clone())))
            .collect::<Result<Vec<_>>>()?;
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; n];
                for (i, &x) in m.0.iter().enumerate() {
                    e[map[i]] = x;
                }
                (Monomial(e.into()), c.clone())
            })
            .collect();
        Ok(MultiPoly { vars: target.vars, terms })
    }

    fn unify(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        if Arc::ptr_eq(&self.vars, &other.vars) || *self.vars == *other.vars {
            return (self.clone(), other.clone());
        }
        let mut all: Vec<&String> = self.vars.iter().chain(other.vars.iter()).collect();
        all.sort_by(|a, b| cmp_vars(a, b));
        all.dedup();
        let a = self.embed(&all).expect("superset");
        let mut b = other.embed(&all).expect("superset");
        b.vars = a.vars.clone();
        (a, b)
    }

    fn same_vars(&self, other: &MultiPoly) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || *self.vars == *other.vars
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn add_ref(&self, other: &MultiPoly) -> MultiPoly {
        if other.is_zero() && (other.nvars() == 0 || self.same_vars(other)) {
            return self.clone();
        }
        let (mut a, b) = self.unify(other);
        for (m, c) in b.terms {
            a.add_term(m, &c);
        }
        a
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &MultiPoly, c: &Rational) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        if !self.same_vars(other) {
            let (a, b) = self.unify(other);
            *self = a;
            for (m, x) in &b.terms {
                self.add_term(m.clone(), &(x * c));
            }
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), &(x * c));
        }
    }

    pub fn mul_ref(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            let (a, _) = self.unify(other);
            return MultiPoly { vars: a.vars, terms: BTreeMap::new() };
        }
        if let Some(c) = other.as_constant() {
            return self.unify(other).0.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.unify(self).0.scale(&c);
        }
        let (a, b) = self.unify(other);
        let mut out = MultiPoly { vars: a.vars.clone(), terms: BTreeMap::new() };
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.product(mb), &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one().unify(self).0;
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Exact composition: replaces each variable occurring in `self` by its binding.
    pub fn substitute(&self, bindings: &BTreeMap<String, MultiPoly>) -> Result<MultiPoly> {
        for v in self.support_vars() {
            if !bindings.contains_key(v) {
                return Err(Error::UnboundVariable(v.to_string()));
            }
        }
        Ok(self.substitute_some(bindings))
    }

    /// Like [`substitute`](Self::substitute) but leaves unbound variables in place.
    pub fn substitute_some(&self, bindings: &BTreeMap<String, MultiPoly>) -> MultiPoly {
        let images: Vec<MultiPoly> = self
            .vars
            .iter()
            .map(|v| bindings.get(v).cloned().unwrap_or_else(|| MultiPoly::var(v)))
            .collect();
        // Ambient list of the result: every image's variables.
        let mut out = images.iter().fold(MultiPoly::zero(), |acc, p| acc.add_ref(&p.scale(&Rational::zero())));
        // Powers of each image, grown on demand.
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![MultiPoly::one(), p.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[k].len() <= e as usize {
                    let next = powers[k].last().unwrap().mul_ref(&images[k]);
                    powers[k].push(next);
                }
                t = t.mul_ref(&powers[k][e as usize]);
            }
            out.add_scaled(&t, &Rational::one());
        }
        out
    }

    /// Renames variables; names not in `map` are kept.
    pub fn rename(&self, map: &BTreeMap<String, String>) -> MultiPoly {
        let bindings = map.iter().map(|(k, v)| (k.clone(), MultiPoly::var(v))).collect();
        self.substitute_some(&bindings)
    }

    /// `p(x + shift·e_k)` for the variable at index `k`.
    pub fn shift(&self, k: usize, by: &Rational) -> MultiPoly {
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let e = m.0[k];
            // (x + by)^e = Σ C(e, i) x^i by^(e-i)
            let mut bpow = Rational::one();
            for i in (0..=e).rev() {
                let mut exps = m.0.to_vec();
                exps[k] = i;
                out.add_term(Monomial(exps.into()), &(&(c * &Rational::binomial(e, i)) * &bpow));
                bpow = &bpow * by;
                if bpow.is_zero() {
                    break;
                }
            }
        }
        out
    }

    /// Forward difference `p(x + e_k) − p(x)`.
    pub fn difference(&self, k: usize) -> MultiPoly {
        self.shift(k, &Rational::one()).add_ref(&self.neg_ref())
    }

    pub fn partial_derivative(&self, k: usize) -> MultiPoly {
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let e = m.0[k];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.to_vec();
            exps[k] -= 1;
            out.add_term(Monomial(exps.into()), &(c * &Rational::from_integer(e as i64)));
        }
        out
    }

    /// Antiderivative in variable `k` with zero constant of integration.
    pub fn antiderivative(&self, k: usize) -> MultiPoly {
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let mut exps = m.0.to_vec();
            exps[k] += 1;
            let d = Rational::from_integer(exps[k] as i64);
            out.add_term(Monomial(exps.into()), &(c / &d));
        }
        out
    }

    /// Fixes variable `k` to `value`, keeping it in the ambient list.
    pub fn evaluate_var(&self, k: usize, value: &Rational) -> MultiPoly {
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let mut exps = m.0.to_vec();
            let e = std::mem::replace(&mut exps[k], 0);
            out.add_term(Monomial(exps.into()), &(c * &value.pow(e)));
        }
        out
    }

    /// Evaluates at a full point (one value per ambient variable).
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars(), "point dimension");
        self.terms
            .iter()
            .map(|(m, c)| m.0.iter().zip(point).fold(c.clone(), |acc, (&e, x)| &acc * &x.pow(e)))
            .sum()
    }

    pub fn neg_ref(&self) -> MultiPoly {
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    /// Substitutes `x_i ↦ x_{perm[i]}` for every ambient index `i`, i.e.
    /// returns `p(x^perm)` with `(x^perm)_i = x_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.nvars());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; perm.len()];
                for (i, &p) in perm.iter().enumerate() {
                    e[p] = m.0[i];
                }
                (Monomial(e.into()), c.clone())
            })
            .collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }
}

impl Default for MultiPoly {
    fn default() -> Self {
        MultiPoly::zero()
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.same_vars(other) {
            return self.terms == other.terms;
        }
        let (a, b) = self.unify(other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(Rational::from_integer(c))
    }
}

macro_rules! poly_ops {
    ($tr:ident, $f:ident, $body:expr) => {
        impl<'a> $tr<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &'a MultiPoly) -> MultiPoly {
                $body(self, rhs)
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &'a MultiPoly) -> MultiPoly {
                $body(&self, rhs)
            }
        }
    };
}
poly_ops!(Add, add, |a: &MultiPoly, b: &MultiPoly| a.add_ref(b));
poly_ops!(Sub, sub, |a: &MultiPoly, b: &MultiPoly| a.add_ref(&b.neg_ref()));
poly_ops!(Mul, mul, |a: &MultiPoly, b: &MultiPoly| a.mul_ref(b));

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::zero(), |acc, p| acc.add_ref(&p))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars.join(","), self)
    }
}

//! Bernoulli polynomials `B_m(x)` with `B_m(x+1) − B_m(x) = m·x^{m−1}`.

use std::sync::{Mutex, OnceLock};

use super::{MultiPoly, Rational};

/// Memo of `B_0, B_1, …` as univariate polynomials in `x`.
///
/// Filled by the recurrence `Σ_{k=0}^{m} C(m+1,k)·B_k(x) = (m+1)·x^m`.
/// The cache sits behind a mutex so concurrent first fills are serialized.
#[derive(Debug, Default)]
pub struct BernoulliCache {
    polys: Vec<MultiPoly>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache { polys: Vec::new() }
    }

    /// Extends the cache through index `m`.
    pub fn fill(&mut self, m: usize) {
        let x = MultiPoly::var("x");
        while self.polys.len() <= m {
            let k = self.polys.len();
            // B_k = x^k − (1/(k+1)) Σ_{j<k} C(k+1, j) B_j
            let mut b = x.pow(k as u32);
            let inv = Rational::new(1, k as i64 + 1);
            for (j, bj) in self.polys.iter().enumerate() {
                let c = &Rational::binomial(k as u32 + 1, j as u32) * &inv;
                b.add_scaled(bj, &-c);
            }
            self.polys.push(b);
        }
    }

    pub fn get(&mut self, m: usize) -> &MultiPoly {
        self.fill(m);
        &self.polys[m]
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

fn global() -> &'static Mutex<BernoulliCache> {
    static CACHE: OnceLock<Mutex<BernoulliCache>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BernoulliCache::new()))
}

/// `B_m(x)` as a polynomial in the variable `x`.
pub fn bernoulli_poly(m: usize) -> MultiPoly {
    global().lock().expect("bernoulli cache poisoned").get(m).clone()
}

/// `B_m` evaluated in the variable `var`.
pub fn bernoulli_poly_in(m: usize, var: &str) -> MultiPoly {
    let p = bernoulli_poly(m);
    if var == "x" {
        return p;
    }
    let mut map = std::collections::BTreeMap::new();
    map.insert("x".to_string(), var.to_string());
    p.rename(&map)
}

/// Bernoulli number `B_m = B_m(0)` (so `B_1 = −1/2`).
pub fn bernoulli_number(m: usize) -> Rational {
    bernoulli_poly(m).constant_term()
}

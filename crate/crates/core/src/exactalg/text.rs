//! Canonical text and JSON forms of [`MultiPoly`].
//!
//! Text form: terms in descending graded-lex order joined by `" + "` / `" - "`,
//! each term `coef*var^exp*var…` with a unit coefficient omitted, for example
//! `1/4*x1^2 - 1/4*x1 + 1/24`. The zero polynomial prints as `0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{MultiPoly, Rational};
use crate::error::{Error, Result};

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.degree() == 0 {
                factors.push(a.to_string());
            }
            for (v, &e) in self.vars().iter().zip(m.exps()) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    /// Parses sums of products of rationals and `var^exp` powers.
    ///
    /// Accepts the canonical text form and also loosely formatted input such
    /// as `2*x1 + x2*x1 - 3` or `x1 + 1/2`.
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

fn parse_poly(src: &str) -> Result<MultiPoly> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut out = MultiPoly::zero();
    let bytes = s.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = Rational::one();
        while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
            pos += 1;
        }
        let term = &s[start..pos];
        if term.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {src:?}")));
        }
        out = out.add_ref(&parse_term(term)?.scale(&sign));
    }
    Ok(out)
}

fn parse_term(term: &str) -> Result<MultiPoly> {
    let mut acc = MultiPoly::one();
    let mut pending_num: Option<Rational> = None;
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in {term:?}")));
        }
        let first = factor.as_bytes()[0];
        if first.is_ascii_digit() {
            // A coefficient must come first; `p/q` arrives as one factor.
            let r: Rational = factor.parse()?;
            pending_num = Some(pending_num.map_or(r.clone(), |p| &p * &r));
        } else if first.is_ascii_alphabetic() {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (n, e.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?),
                None => (factor, 1),
            };
            if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::Parse(format!("bad variable name {name:?}")));
            }
            acc = acc.mul_ref(&MultiPoly::var(name).pow(exp));
        } else {
            return Err(Error::Parse(format!("unexpected factor {factor:?}")));
        }
    }
    if let Some(c) = pending_num {
        acc = acc.scale(&c);
    }
    Ok(acc)
}

/// JSON term record: exponent vector plus numerator/denominator strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub num: String,
    pub den: String,
}

/// JSON form: `{"vars":[...],"terms":[{"exp":[..],"num":"..","den":".."}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl MultiPoly {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.vars().to_vec(),
            terms: self
                .terms()
                .map(|(m, c)| TermJson { exp: m.exps().to_vec(), num: c.numer().to_string(), den: c.denom().to_string() })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<MultiPoly> {
        let terms = j
            .terms
            .iter()
            .map(|t| {
                let num = t.num.parse().map_err(|_| Error::Parse(format!("bad numerator {:?}", t.num)))?;
                let den = t.den.parse().map_err(|_| Error::Parse(format!("bad denominator {:?}", t.den)))?;
                Ok((t.exp.clone(), Rational::from_bigints(num, den)?))
            })
            .collect::<Result<Vec<_>>>()?;
        MultiPoly::from_terms(&j.vars, terms)
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        MultiPoly::from_json(&j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_examples() {
        let p: MultiPoly = "1/4*x1^2 - 1/4*x1 + 1/24".parse().unwrap();
        assert_eq!(p.to_string(), "1/4*x1^2 - 1/4*x1 + 1/24");
        let q: MultiPoly = "-x1 + 1/2".parse().unwrap();
        assert_eq!(q.to_string(), "-x1 + 1/2");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        let r: MultiPoly = "x2*x1 + 2*x1 - 3".parse().unwrap();
        assert_eq!(r.to_string(), "x1*x2 + 2*x1 - 3");
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<MultiPoly>().is_err());
        assert!("x1 +".parse::<MultiPoly>().is_err());
        assert!("x1^a".parse::<MultiPoly>().is_err());
        assert!("x1**2".parse::<MultiPoly>().is_err());
        assert!("(x1)".parse::<MultiPoly>().is_err());
    }

    #[test]
    fn json_roundtrip_keeps_ambient_vars() {
        let p = MultiPoly::from_terms(&["x1", "x2", "x3"], vec![(vec![1, 0, 0], Rational::new(-3, 7))]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"vars":["x1","x2","x3"],"terms":[{"exp":[1,0,0],"num":"-3","den":"7"}]}"#);
        let back: MultiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back.vars(), p.vars());
        assert_eq!(back, p);
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(((0u32..4, 0u32..4, 0u32..3), (-50i64..50, 1i64..20)), 0..8).prop_map(|ts| {
            MultiPoly::from_terms(
                &["x1", "x2", "w1"],
                ts.into_iter().map(|((a, b, c), (n, d))| (vec![a, b, c], Rational::new(n, d))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn text_serialize_parse_serialize(p in arb_poly()) {
            let s = p.to_string();
            let q: MultiPoly = s.parse().unwrap();
            prop_assert_eq!(&q, &p);
            prop_assert_eq!(q.to_string(), s);
        }

        #[test]
        fn json_roundtrip(p in arb_poly()) {
            let s = serde_json::to_string(&p).unwrap();
            let q: MultiPoly = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(serde_json::to_string(&q).unwrap(), s);
        }
    }
}

//! Front end for `wittenpoly`: turns a [`Request`] into a text, LaTeX or JSON
//! document.
//!
//! ```
//! use wittenpoly_cli::{run, Basis, KindSel, Request};
//!
//! let mut req = Request::lie("A2", 0);
//! req.kind = KindSel::P;
//! req.basis = Basis::Bernoulli;
//! let out = run(&req).unwrap();
//! assert_eq!(out.document, "1/4*B2(x1) + B1(x1)*B1(x2) + 1/4*B2(x2)\n");
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use serde::Serialize;
use thiserror::Error;
use wittenpoly::exactalg::{MultiPoly, PolyJson, Rational};
use wittenpoly::liepolys::{
    bernoulli_expansion, check_product, check_theorem1, compute, to_bernoulli_expansion, BernoulliExpansion,
    CheckStatus, ComputeOptions, LieKind, Report, FEASIBILITY_LIMIT,
};
use wittenpoly::rootsystems::{build_from_label, build_root_system, Label};
use wittenpoly::zetaspecial::{
    injection_count, parse_matrix_json, special_value_with, EvalOptions, Kind, LinearFormVector, MatrixInput,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] wittenpoly::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cannot start thread pool: {0}")]
    Threads(String),
    #[error("{0}")]
    Usage(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Lie { algebra: String },
    Generic { matrix_path: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum KindSel {
    P,
    Q,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Basis {
    Monomial,
    Bernoulli,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Request {
    pub mode: Mode,
    pub ell: u32,
    pub kind: KindSel,
    pub basis: Basis,
    pub format: Format,
    pub checks: bool,
    pub z_override: Option<usize>,
    pub threads: Option<usize>,
    pub force: bool,
    /// Generic mode: keep `w1, …, wn` instead of substituting `W(x)`.
    pub symbolic_w: bool,
}

impl Request {
    pub fn lie(algebra: &str, ell: u32) -> Self {
        Request::with_mode(Mode::Lie { algebra: algebra.to_string() }, ell)
    }

    pub fn generic(matrix_path: impl Into<PathBuf>, ell: u32) -> Self {
        Request::with_mode(Mode::Generic { matrix_path: matrix_path.into() }, ell)
    }

    fn with_mode(mode: Mode, ell: u32) -> Self {
        Request {
            mode,
            ell,
            kind: KindSel::Both,
            basis: Basis::Monomial,
            format: Format::Text,
            checks: false,
            z_override: None,
            threads: None,
            force: false,
            symbolic_w: false,
        }
    }

    fn kinds(&self) -> Vec<LieKind> {
        match self.kind {
            KindSel::P => vec![LieKind::P],
            KindSel::Q => vec![LieKind::Q],
            KindSel::Both => vec![LieKind::P, LieKind::Q],
        }
    }
}

/// The emitted document and whether every requested check passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub document: String,
    pub success: bool,
}

/// One computed polynomial ready for emission.
struct Item {
    kind: LieKind,
    poly: MultiPoly,
    expansion: Option<BernoulliExpansion>,
}

pub fn run(req: &Request) -> Result<Outcome, CliError> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = req.threads {
        if t == 0 {
            return Err(CliError::Usage("thread count must be positive".into()));
        }
        pool = pool.num_threads(t);
    }
    let pool = pool.build().map_err(|e| CliError::Threads(e.to_string()))?;
    pool.install(|| run_inner(req))
}

fn run_inner(req: &Request) -> Result<Outcome, CliError> {
    let (title, items, reports) = match &req.mode {
        Mode::Lie { algebra } => lie_items(req, algebra)?,
        Mode::Generic { matrix_path } => {
            if req.checks {
                return Err(CliError::Usage("--checks applies to --algebra requests".into()));
            }
            let text = std::fs::read_to_string(matrix_path)
                .map_err(|source| CliError::Io { path: matrix_path.clone(), source })?;
            (None, generic_items(req, &parse_matrix_json(&text)?)?, Vec::new())
        }
    };
    let success = reports.iter().all(Report::all_passed);
    let document = match req.format {
        Format::Text => render_text(req, &items, &reports),
        Format::Latex => render_latex(req, title.as_deref(), &items, &reports),
        Format::Json => render_json(req, title.as_deref(), &items, &reports),
    };
    Ok(Outcome { document, success })
}

type Computed = (Option<String>, Vec<Item>, Vec<Report>);

fn lie_items(req: &Request, algebra: &str) -> Result<Computed, CliError> {
    let label: Label = algebra.parse()?;
    let rs = build_from_label(&label);
    let opts = ComputeOptions { force: req.force, z: req.z_override, ..Default::default() };
    let mut polys = BTreeMap::new();
    let needed = if req.checks { vec![LieKind::P, LieKind::Q] } else { req.kinds() };
    for kind in needed {
        polys.insert(kind as u8, compute(&rs, req.ell, kind, opts)?);
    }
    let mut items = Vec::new();
    for kind in req.kinds() {
        let lp = &polys[&(kind as u8)];
        let expansion = match (req.basis, kind) {
            (Basis::Monomial, _) => None,
            (Basis::Bernoulli, LieKind::P) => Some(to_bernoulli_expansion(lp)?),
            (Basis::Bernoulli, LieKind::Q) => Some(bernoulli_expansion(&lp.poly)),
        };
        items.push(Item { kind, poly: lp.poly.clone(), expansion });
    }
    let mut reports = Vec::new();
    if req.checks {
        reports.push(check_theorem1(&rs, req.ell, &polys[&(LieKind::P as u8)], &polys[&(LieKind::Q as u8)]));
        if label.0.len() > 1 {
            let head = build_root_system(&label.0[0].to_string())?;
            let tail = build_from_label(&Label(label.0[1..].to_vec()));
            reports.push(check_product(&head, &tail, req.ell)?);
        }
    }
    Ok((Some(label.to_string()), items, reports))
}

fn generic_items(req: &Request, input: &MatrixInput) -> Result<Vec<Item>, CliError> {
    let m = &input.matrix;
    let z = req.z_override.unwrap_or(m.z_m());
    let estimate = injection_count(m.n_cols(), z);
    if estimate > FEASIBILITY_LIMIT && !req.force {
        return Err(wittenpoly::Error::Infeasible { estimate, limit: FEASIBILITY_LIMIT }.into());
    }
    let w = if req.symbolic_w {
        LinearFormVector::generic(m.n_cols())
    } else if let Some(sub) = &input.substitution {
        let forms = (1..=m.n_cols())
            .map(|j| {
                let name = format!("w{j}");
                sub.get(&name).cloned().unwrap_or_else(|| MultiPoly::var(&name))
            })
            .collect();
        LinearFormVector::new(forms)?
    } else {
        LinearFormVector::from_rows(m)
    };
    let opts = EvalOptions { z: Some(z), ..Default::default() };
    let mut items = Vec::new();
    for kind in req.kinds() {
        let zk = match kind {
            LieKind::P => Kind::Series,
            LieKind::Q => Kind::Integral,
        };
        let poly = special_value_with(zk, req.ell, &w, m, opts)?;
        let expansion = (req.basis == Basis::Bernoulli).then(|| bernoulli_expansion(&poly));
        items.push(Item { kind, poly, expansion });
    }
    Ok(items)
}

pub fn emit_text(p: &MultiPoly, basis: Basis) -> String {
    match basis {
        Basis::Monomial => p.to_string(),
        Basis::Bernoulli => bernoulli_expansion(p).to_string(),
    }
}

fn item_text(it: &Item) -> String {
    match &it.expansion {
        Some(e) => e.to_string(),
        None => it.poly.to_string(),
    }
}

fn render_text(req: &Request, items: &[Item], reports: &[Report]) -> String {
    let mut out = String::new();
    for it in items {
        if req.kind == KindSel::Both {
            let _ = write!(out, "{}: ", it.kind);
        }
        out.push_str(&item_text(it));
        out.push('\n');
    }
    for r in reports {
        out.push('\n');
        out.push_str(&r.to_string());
    }
    out
}

/// `x1 ↦ x_1`, `w12 ↦ w_{12}`.
fn latex_var(v: &str) -> String {
    match v.find(|c: char| c.is_ascii_digit()) {
        Some(i) if i > 0 => {
            let (head, idx) = v.split_at(i);
            if idx.len() == 1 {
                format!("{head}_{idx}")
            } else {
                format!("{head}_{{{idx}}}")
            }
        }
        _ => v.to_string(),
    }
}

fn latex_exp(e: u32) -> String {
    if e < 10 {
        e.to_string()
    } else {
        format!("{{{e}}}")
    }
}

/// One term body times `c`: `\frac{3 B_2(x_2)}{4}`, `-B_1(x_1)`, `\frac{5}{12}`.
fn latex_term(out: &mut String, first: bool, c: &Rational, body: &str) {
    match (first, c.is_negative()) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    let a = c.abs();
    let num = a.numer().to_string();
    let den = a.denom().to_string();
    let top = match (body.is_empty(), num == "1") {
        (true, _) => num,
        (false, true) => body.to_string(),
        (false, false) => format!("{num} {body}"),
    };
    if den == "1" {
        out.push_str(&top);
    } else {
        let _ = write!(out, "\\frac{{{top}}}{{{den}}}");
    }
}

/// LaTeX for `p` in the requested basis; monomials in descending graded-lex order.
pub fn emit_latex(p: &MultiPoly, basis: Basis) -> String {
    match basis {
        Basis::Monomial => latex_monomial(p),
        Basis::Bernoulli => latex_bernoulli(&bernoulli_expansion(p)),
    }
}

fn latex_monomial(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let body: Vec<String> = p
            .vars()
            .iter()
            .zip(m.exps())
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| if e == 1 { latex_var(v) } else { format!("{}^{}", latex_var(v), latex_exp(e)) })
            .collect();
        latex_term(&mut out, i == 0, c, &body.join(" "));
    }
    out
}

fn latex_bernoulli(e: &BernoulliExpansion) -> String {
    let terms = e.terms();
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (l, c)) in terms.iter().enumerate() {
        let body: Vec<String> = e
            .vars()
            .iter()
            .zip(l)
            .filter(|(_, &k)| k > 0)
            .map(|(v, &k)| format!("B_{}({})", latex_exp(k), latex_var(v)))
            .collect();
        latex_term(&mut out, i == 0, c, &body.join(" "));
    }
    out
}

fn item_latex(it: &Item) -> String {
    match &it.expansion {
        Some(e) => latex_bernoulli(e),
        None => latex_monomial(&it.poly),
    }
}

fn render_latex(req: &Request, title: Option<&str>, items: &[Item], reports: &[Report]) -> String {
    let mut out = String::new();
    for it in items {
        if req.kind == KindSel::Both {
            match title {
                Some(t) => {
                    let _ = write!(out, "{}_{{{},\\mathrm{{{t}}}}} = ", it.kind, req.ell);
                }
                None => {
                    let _ = write!(out, "{} = ", it.kind);
                }
            }
        }
        out.push_str(&item_latex(it));
        out.push('\n');
    }
    for r in reports {
        out.push('\n');
        out.push_str(&r.to_string());
    }
    out
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    status: &'a str,
    detail: &'a str,
}

#[derive(Serialize)]
struct ItemJson<'a> {
    algebra: Option<&'a str>,
    ell: u32,
    kind: String,
    basis: &'a str,
    poly: PolyJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    checks: Option<Vec<CheckJson<'a>>>,
}

/// The JSON document for one polynomial. In the Bernoulli basis each term's
/// `exp` is the index vector `L` of `Π B_{L_i}(x_i)`.
pub fn emit_json(p: &MultiPoly, basis: Basis) -> String {
    serde_json::to_string(&poly_json(p, basis)).expect("serializable")
}

fn poly_json(p: &MultiPoly, basis: Basis) -> PolyJson {
    match basis {
        Basis::Monomial => p.to_json(),
        Basis::Bernoulli => bernoulli_expansion(p).monomial_poly().to_json(),
    }
}

fn render_json(req: &Request, title: Option<&str>, items: &[Item], reports: &[Report]) -> String {
    let basis = match req.basis {
        Basis::Monomial => "monomial",
        Basis::Bernoulli => "bernoulli",
    };
    let checks: Option<Vec<CheckJson>> = req.checks.then(|| {
        reports
            .iter()
            .flat_map(|r| &r.results)
            .map(|c| CheckJson {
                name: &c.name,
                status: match c.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "fail",
                    CheckStatus::Skipped => "skipped",
                },
                detail: &c.detail,
            })
            .collect()
    });
    let mut docs: Vec<ItemJson> = items
        .iter()
        .map(|it| ItemJson {
            algebra: title,
            ell: req.ell,
            kind: it.kind.to_string(),
            basis,
            poly: match &it.expansion {
                Some(e) => e.monomial_poly().to_json(),
                None => it.poly.to_json(),
            },
            checks: None,
        })
        .collect();
    if let Some(last) = docs.last_mut() {
        last.checks = checks;
    }
    let mut s = if docs.len() == 1 {
        serde_json::to_string_pretty(&docs[0])
    } else {
        serde_json::to_string_pretty(&docs)
    }
    .expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn latex_examples() {
        let p = poly("1/4*x1^2 - 1/4*x1 + 1/24");
        let e = bernoulli_expansion(&poly("1/4*x1^2 + x1*x2 + 1/4*x2^2 - 3/4*x1 - 3/4*x2 + 1/3"));
        assert_eq!(latex_bernoulli(&e), "\\frac{B_2(x_1)}{4} + B_1(x_1) B_1(x_2) + \\frac{B_2(x_2)}{4}");
        assert_eq!(emit_latex(&MultiPoly::zero(), Basis::Monomial), "0");
        assert_eq!(emit_latex(&MultiPoly::zero(), Basis::Bernoulli), "0");
        assert_eq!(emit_latex(&poly("x1*x2"), Basis::Monomial), "x_1 x_2");
        assert_eq!(emit_latex(&p, Basis::Monomial), "\\frac{x_1^2}{4} - \\frac{x_1}{4} + \\frac{1}{24}");
        assert_eq!(emit_latex(&poly("-3/7*w12^11"), Basis::Monomial), "-\\frac{3 w_{12}^{11}}{7}");
    }

    #[test]
    fn json_roundtrip() {
        let p = poly("-1/60*x1^5 + 7*x1*x2 - 2");
        let back: MultiPoly = serde_json::from_str(&emit_json(&p, Basis::Monomial)).unwrap();
        assert_eq!(back, p);
        let b: PolyJson = serde_json::from_str(&emit_json(&p, Basis::Bernoulli)).unwrap();
        let coeffs = MultiPoly::from_json(&b).unwrap();
        assert_eq!(coeffs, bernoulli_expansion(&p).monomial_poly());
    }

    #[test]
    fn text_examples() {
        let mut q = Request::lie("A1", 3);
        q.kind = KindSel::Q;
        assert_eq!(run(&q).unwrap().document, "-1/4*x1^4\n");
        let both = run(&Request::lie("A1", 0)).unwrap().document;
        assert_eq!(both, "P: -x1 + 1/2\nQ: -x1\n");
        assert_eq!(emit_text(&poly("x1 - 1/2"), Basis::Bernoulli), "B1(x1)");
    }

    #[test]
    fn checks_and_products() {
        let mut req = Request::lie("A1xA1", 1);
        req.checks = true;
        let out = run(&req).unwrap();
        assert!(out.success);
        assert!(out.document.contains("product check A1 x A1"));
        assert!(!out.document.contains("[FAIL]"));
    }

    #[test]
    fn errors() {
        assert!(matches!(run(&Request::lie("Q7", 0)), Err(CliError::Lib(_))));
        assert!(matches!(run(&Request::lie("E8", 0)), Err(CliError::Lib(wittenpoly::Error::Infeasible { .. }))));
        let mut z = Request::lie("A2", 0);
        z.z_override = Some(7);
        assert!(matches!(run(&z), Err(CliError::Lib(wittenpoly::Error::ZOutOfRange { .. }))));
        assert!(matches!(run(&Request::generic("/nonexistent/m.json", 0)), Err(CliError::Io { .. })));
    }
}

use std::collections::BTreeMap;
use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, Rational};
use crate::rootsystems::WeightMatrix;

/// An `N × n` matrix of nonnegative rationals with no zero row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZetaMatrix {
    entries: Vec<Vec<Rational>>,
    z_m: usize,
}

/// Checks the hypotheses and computes `Z_M`, the largest number of zeros in a row.
pub fn validate_matrix(raw: Vec<Vec<Rational>>) -> Result<ZetaMatrix> {
    let n_rows = raw.len();
    if n_rows == 0 {
        return Err(Error::Shape("matrix has no rows".into()));
    }
    let n = raw[0].len();
    if n == 0 {
        return Err(Error::Shape("matrix has no columns".into()));
    }
    let mut z_m = 0;
    for (i, row) in raw.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Shape(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
        }
        if let Some(j) = row.iter().position(Rational::is_negative) {
            return Err(Error::NegativeEntry { row: i + 1, col: j + 1 });
        }
        let zeros = row.iter().filter(|a| a.is_zero()).count();
        if zeros == n {
            return Err(Error::ZeroRow(i + 1));
        }
        z_m = z_m.max(zeros);
    }
    Ok(ZetaMatrix { entries: raw, z_m })
}

impl ZetaMatrix {
    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        validate_matrix(rows.iter().map(|r| r.iter().map(|&a| Rational::from_integer(a)).collect()).collect())
    }

    pub fn from_weight_matrix(m: &WeightMatrix) -> Self {
        let raw = m.entries.iter().map(|r| r.iter().map(|&a| Rational::from_integer(a as i64)).collect()).collect();
        validate_matrix(raw).expect("weight matrices satisfy the hypotheses")
    }

    /// Number of rows `N`.
    pub fn n_rows(&self) -> usize {
        self.entries.len()
    }

    /// Number of columns `n`.
    pub fn n_cols(&self) -> usize {
        self.entries[0].len()
    }

    pub fn z_m(&self) -> usize {
        self.z_m
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// `M^γ = (a_{i,γ(j)})`.
    pub fn permute_columns(&self, perm: &[usize]) -> ZetaMatrix {
        let entries = self.entries.iter().map(|r| perm.iter().map(|&k| r[k].clone()).collect()).collect();
        ZetaMatrix { entries, z_m: self.z_m }
    }

    /// The matrix with row `i` deleted, or `None` when it is the only row.
    pub fn without_row(&self, i: usize) -> Option<ZetaMatrix> {
        if self.n_rows() == 1 {
            return None;
        }
        let mut entries = self.entries.clone();
        entries.remove(i);
        Some(validate_matrix(entries).expect("a subset of valid rows is valid"))
    }

    /// Admissible range `Z_M ≤ Z < n`.
    pub fn check_z(&self, z: usize) -> Result<()> {
        if z < self.z_m || z >= self.n_cols() {
            return Err(Error::ZOutOfRange { z, min: self.z_m, max: self.n_cols() - 1 });
        }
        Ok(())
    }
}

impl fmt::Debug for ZetaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "ZetaMatrix[{}]", rows.join(", "))
    }
}

/// The partition of rows by leading zeros: `classes[j]` holds the (0-based)
/// rows whose first nonzero entry is in column `j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RowClasses {
    pub classes: Vec<Vec<usize>>,
}

impl RowClasses {
    /// `|F_{j+1}|` in 1-based terms.
    pub fn size(&self, j: usize) -> usize {
        self.classes[j].len()
    }
}

pub fn row_classes(m: &ZetaMatrix, z: usize) -> Result<RowClasses> {
    m.check_z(z)?;
    let mut classes = vec![Vec::new(); m.n_cols()];
    for (i, row) in m.rows().iter().enumerate() {
        let j = row.iter().position(|a| !a.is_zero()).expect("no zero rows");
        classes[j].push(i);
    }
    Ok(RowClasses { classes })
}

/// `n` linear forms standing in for `w = (w_1, …, w_n)`.
#[derive(Clone, PartialEq, Debug)]
pub struct LinearFormVector {
    pub forms: Vec<MultiPoly>,
}

impl LinearFormVector {
    pub fn new(forms: Vec<MultiPoly>) -> Result<Self> {
        for f in &forms {
            if f.total_degree().unwrap_or(0) > 1 {
                return Err(Error::Parse(format!("{f} is not a linear form")));
            }
        }
        Ok(LinearFormVector { forms })
    }

    /// Fresh variables `w1, …, wn`.
    pub fn generic(n: usize) -> Self {
        LinearFormVector { forms: (1..=n).map(|j| MultiPoly::var(&format!("w{j}"))).collect() }
    }

    /// `W_M(x)_j = Σ_i x_i a_{ij}` in variables `x1, …, xN`.
    pub fn from_rows(m: &ZetaMatrix) -> Self {
        let vars: Vec<String> = (1..=m.n_rows()).map(|i| format!("x{i}")).collect();
        let forms = (0..m.n_cols())
            .map(|j| {
                let terms = (0..m.n_rows()).map(|i| {
                    let mut e = vec![0; m.n_rows()];
                    e[i] = 1;
                    (e, m.entry(i, j).clone())
                });
                MultiPoly::from_terms(&vars, terms).expect("distinct variable names")
            })
            .collect();
        LinearFormVector { forms }
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// `w + v` for a vector of constants.
    pub fn shifted(&self, v: &[Rational]) -> Self {
        let forms = self.forms.iter().zip(v).map(|(f, c)| f.add_ref(&MultiPoly::constant(c.clone()))).collect();
        LinearFormVector { forms }
    }

    /// True when form `j` is the bare variable `w{j+1}`.
    pub fn is_generic(&self) -> bool {
        self.forms.iter().enumerate().all(|(j, f)| *f == MultiPoly::var(&format!("w{}", j + 1)))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    #[serde(rename = "N")]
    n_rows: usize,
    n: usize,
    entries: Vec<Vec<String>>,
    #[serde(default)]
    substitution: Option<BTreeMap<String, String>>,
}

/// A parsed matrix file: the matrix and an optional map `w_j ↦ linear form`.
#[derive(Clone, Debug)]
pub struct MatrixInput {
    pub matrix: ZetaMatrix,
    pub substitution: Option<BTreeMap<String, MultiPoly>>,
}

/// Parses `{"N":..,"n":..,"entries":[["p/q",..],..]}` with an optional
/// `"substitution": {"w1": "x1 + x2", ..}` block.
pub fn parse_matrix_json(text: &str) -> Result<MatrixInput> {
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix file: {e}")))?;
    if file.entries.len() != file.n_rows {
        return Err(Error::Shape(format!("N = {} but {} rows given", file.n_rows, file.entries.len())));
    }
    let raw = file
        .entries
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != file.n {
                return Err(Error::Shape(format!("n = {} but row {} has {} entries", file.n, i + 1, row.len())));
            }
            row.iter().map(|s| s.parse::<Rational>()).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let matrix = validate_matrix(raw)?;
    let substitution = file
        .substitution
        .map(|m| {
            m.into_iter()
                .map(|(k, v)| Ok((k, v.parse::<MultiPoly>()?)))
                .collect::<Result<BTreeMap<_, _>>>()
        })
        .transpose()?;
    Ok(MatrixInput { matrix, substitution })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_examples() {
        assert_eq!(ZetaMatrix::from_integers(&[&[1, 0, 1], &[0, 1, 1]]).unwrap().z_m(), 1);
        assert_eq!(ZetaMatrix::from_integers(&[&[1, 0], &[0, 1]]).unwrap().z_m(), 1);
        assert_eq!(ZetaMatrix::from_integers(&[&[1, 1], &[1, 1]]).unwrap().z_m(), 0);
        assert_eq!(ZetaMatrix::from_integers(&[&[1, 1], &[0, 0]]), Err(Error::ZeroRow(2)));
        assert_eq!(ZetaMatrix::from_integers(&[&[1, -1]]), Err(Error::NegativeEntry { row: 1, col: 2 }));
        assert!(matches!(ZetaMatrix::from_integers(&[&[1, 1], &[1]]), Err(Error::Shape(_))));
        assert!(matches!(validate_matrix(vec![]), Err(Error::Shape(_))));
    }

    #[test]
    fn row_class_examples() {
        let m = ZetaMatrix::from_integers(&[&[1, 0, 1], &[0, 1, 1]]).unwrap();
        assert_eq!(row_classes(&m, 1).unwrap().classes, vec![vec![0], vec![1], vec![]]);
        let id = ZetaMatrix::from_integers(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(row_classes(&id, 1).unwrap().classes, vec![vec![0], vec![1]]);
        let m = ZetaMatrix::from_integers(&[&[0, 0, 1]]).unwrap();
        assert_eq!(row_classes(&m, 2).unwrap().classes, vec![vec![], vec![], vec![0]]);
        assert_eq!(row_classes(&m, 3), Err(Error::ZOutOfRange { z: 3, min: 2, max: 2 }));
        assert_eq!(row_classes(&id, 0), Err(Error::ZOutOfRange { z: 0, min: 1, max: 1 }));
    }

    #[test]
    fn forms_from_rows() {
        let m = ZetaMatrix::from_integers(&[&[1, 0, 1], &[0, 1, 1]]).unwrap();
        let w = LinearFormVector::from_rows(&m);
        let strs: Vec<String> = w.forms.iter().map(|f| f.to_string()).collect();
        assert_eq!(strs, vec!["x1", "x2", "x1 + x2"]);
        assert!(LinearFormVector::generic(3).is_generic());
        assert!(!w.is_generic());
        assert!(LinearFormVector::new(vec!["x1^2".parse().unwrap()]).is_err());
    }

    #[test]
    fn matrix_json() {
        let m = parse_matrix_json(r#"{"N": 2, "n": 2, "entries": [["1", "1/2"], ["0", "2"]]}"#).unwrap();
        assert_eq!(m.matrix.entry(0, 1), &Rational::new(1, 2));
        assert!(m.substitution.is_none());
        let s = parse_matrix_json(r#"{"N":1,"n":1,"entries":[["1"]],"substitution":{"w1":"x1 + 1"}}"#).unwrap();
        assert_eq!(s.substitution.unwrap()["w1"].to_string(), "x1 + 1");

        let err = parse_matrix_json("{\"N\": 1,\n \"n\": 1, \"entries\": [[1]]}").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        assert!(matches!(parse_matrix_json(r#"{"N":2,"n":1,"entries":[["1"]]}"#), Err(Error::Shape(_))));
        assert!(matches!(parse_matrix_json(r#"{"N":1,"n":1,"entries":[["0"]]}"#), Err(Error::ZeroRow(1))));
    }
}

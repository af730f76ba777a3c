//! Root systems of the simple types and their direct sums.
//!
//! Simple roots follow Bourbaki numbering. Inner products are normalized so
//! that long roots have squared length 2:
//!
//! | type | short simple roots | (α,α) short |
//! |------|--------------------|-------------|
//! | B_r  | α_r                | 1           |
//! | C_r  | α_1 … α_{r−1}      | 1           |
//! | F_4  | α_3, α_4           | 1           |
//! | G_2  | α_1                | 2/3         |
//!
//! Positive roots are generated from the simple roots by root strings and
//! listed by height, ties broken so that simple roots come in index order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// A simple component `(family, rank)`, e.g. `('B', 3)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SimpleType {
    pub family: char,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: char, rank: usize) -> Result<Self> {
        let family = family.to_ascii_uppercase();
        let ok = match family {
            'A' => rank >= 1,
            'B' | 'C' => rank >= 2,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => return Err(Error::InvalidLabel(format!("{family}{rank}"))),
        };
        if !ok {
            return Err(Error::InvalidRank { family, rank });
        }
        Ok(SimpleType { family, rank })
    }

    /// Gram matrix of the simple roots.
    fn gram(&self) -> Vec<Vec<Rational>> {
        let r = self.rank;
        let q = |n, d| Rational::new(n, d);
        let mut g = vec![vec![Rational::zero(); r]; r];
        let link = |g: &mut Vec<Vec<Rational>>, i: usize, j: usize, v: Rational| {
            g[i][j] = v.clone();
            g[j][i] = v;
        };
        match self.family {
            'A' | 'D' | 'E' => {
                for row in g.iter_mut().enumerate() {
                    row.1[row.0] = q(2, 1);
                }
                match self.family {
                    'A' => (0..r - 1).for_each(|i| link(&mut g, i, i + 1, q(-1, 1))),
                    'D' => {
                        (0..r - 2).for_each(|i| link(&mut g, i, i + 1, q(-1, 1)));
                        link(&mut g, r - 3, r - 1, q(-1, 1));
                    }
                    _ => {
                        link(&mut g, 0, 2, q(-1, 1));
                        link(&mut g, 1, 3, q(-1, 1));
                        (2..r - 1).for_each(|i| link(&mut g, i, i + 1, q(-1, 1)));
                    }
                }
            }
            'B' => {
                (0..r).for_each(|i| g[i][i] = if i + 1 == r { q(1, 1) } else { q(2, 1) });
                (0..r - 1).for_each(|i| link(&mut g, i, i + 1, q(-1, 1)));
            }
            'C' => {
                (0..r).for_each(|i| g[i][i] = if i + 1 == r { q(2, 1) } else { q(1, 1) });
                (0..r - 2).for_each(|i| link(&mut g, i, i + 1, q(-1, 2)));
                link(&mut g, r - 2, r - 1, q(-1, 1));
            }
            'F' => {
                g[0][0] = q(2, 1);
                g[1][1] = q(2, 1);
                g[2][2] = q(1, 1);
                g[3][3] = q(1, 1);
                link(&mut g, 0, 1, q(-1, 1));
                link(&mut g, 1, 2, q(-1, 1));
                link(&mut g, 2, 3, q(-1, 2));
            }
            'G' => {
                g[0][0] = q(2, 3);
                g[1][1] = q(2, 1);
                link(&mut g, 0, 1, q(-1, 1));
            }
            _ => unreachable!("validated in SimpleType::new"),
        }
        g
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A type descriptor: one or more simple components.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Label(pub Vec<SimpleType>);

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join("x"))
    }
}

impl FromStr for Label {
    type Err = Error;

    /// Accepts `A2`, `G2`, `A1xA2`, `A1+B2`, and the Lie-algebra names
    /// `sl3`, `so5`, `sp6`, `so8`, `g2`, `f4`, `e6`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(['x', 'X', '+', '⊕']).map(str::trim).collect();
        if parts.iter().any(|p| p.is_empty()) {
            return Err(Error::InvalidLabel(s.to_string()));
        }
        parts.into_iter().map(parse_simple).collect::<Result<Vec<_>>>().map(Label)
    }
}

fn parse_simple(p: &str) -> Result<SimpleType> {
    let bad = || Error::InvalidLabel(p.to_string());
    let lower = p.to_ascii_lowercase();
    let split = lower.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
    let (head, digits) = lower.split_at(split);
    let k: usize = digits.parse().map_err(|_| bad())?;
    let (family, rank) = match head {
        "a" | "b" | "c" | "d" | "e" | "f" | "g" => (head.chars().next().unwrap(), k),
        "sl" if k >= 2 => ('a', k - 1),
        "so" if k >= 5 && k % 2 == 1 => ('b', (k - 1) / 2),
        "so" if k >= 8 && k % 2 == 0 => ('d', k / 2),
        "sp" if k >= 4 && k % 2 == 0 => ('c', k / 2),
        _ => return Err(bad()),
    };
    SimpleType::new(family, rank)
}

/// Cartan data and positive roots of a (semi)simple root system.
#[derive(Clone, PartialEq, Debug)]
pub struct RootSystem {
    pub label: Label,
    pub rank: usize,
    /// `cartan[i][j] = ⟨α_i, α_j^∨⟩ = 2(α_i,α_j)/(α_j,α_j)`.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates.
    pub positive_roots: Vec<Vec<u32>>,
    /// Coroots `α^∨` in simple-coroot coordinates, aligned with `positive_roots`.
    pub coroot_coords: Vec<Vec<u32>>,
    /// `(α,α)` for each positive root.
    pub root_lengths: Vec<Rational>,
    gram: Vec<Vec<Rational>>,
}

impl RootSystem {
    /// Number of positive roots.
    pub fn n_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    fn from_gram(label: Label, gram: Vec<Vec<Rational>>, order: Option<&[usize]>) -> RootSystem {
        let r = gram.len();
        let two = Rational::from_integer(2);
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let v = &(&two * &gram[i][j]) / &gram[j][j];
                        v.numer().try_into().expect("Cartan entries are small integers")
                    })
                    .collect()
            })
            .collect();
        let roots = closure(&cartan, order);
        let inner = |c: &[u32]| -> Rational {
            let mut s = Rational::zero();
            for i in 0..r {
                for j in 0..r {
                    if c[i] != 0 && c[j] != 0 && !gram[i][j].is_zero() {
                        s += &(&gram[i][j] * &Rational::from_integer((c[i] * c[j]) as i64));
                    }
                }
            }
            s
        };
        let root_lengths: Vec<Rational> = roots.iter().map(|c| inner(c)).collect();
        let coroot_coords = roots
            .iter()
            .zip(&root_lengths)
            .map(|(c, len)| {
                (0..r)
                    .map(|j| {
                        let k = &(&Rational::from_integer(c[j] as i64) * &gram[j][j]) / len;
                        assert!(k.is_integer(), "coroot coordinate {k} is not integral");
                        u32::try_from(k.numer()).expect("nonnegative coroot coordinate")
                    })
                    .collect()
            })
            .collect();
        RootSystem { label, rank: r, cartan, positive_roots: roots, coroot_coords, root_lengths, gram }
    }
}

/// Positive roots from the Cartan matrix by root strings.
///
/// For a root `β` and simple root `α_i`, `β + α_i` is a root iff
/// `p − ⟨β, α_i^∨⟩ > 0`, where `p` is the largest `k` with `β − kα_i` a root.
/// Roots of each height are found before the next, so `p` is always known.
/// `order` permutes the order in which simple roots are tried.
fn closure(cartan: &[Vec<i64>], order: Option<&[usize]>) -> Vec<Vec<u32>> {
    let r = cartan.len();
    let idx: Vec<usize> = order.map_or_else(|| (0..r).collect(), |o| o.to_vec());
    let simple = |i: usize| -> Vec<u32> {
        let mut e = vec![0; r];
        e[i] = 1;
        e
    };
    let mut all: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut layer: Vec<Vec<u32>> = idx.iter().map(|&i| simple(i)).collect();
    let mut out: Vec<Vec<u32>> = Vec::new();
    while !layer.is_empty() {
        all.extend(layer.iter().cloned());
        let mut next: BTreeSet<Vec<u32>> = BTreeSet::new();
        for beta in &layer {
            for &i in &idx {
                let mut p = 0;
                let mut down = beta.clone();
                while down[i] > 0 {
                    down[i] -= 1;
                    if !all.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..r).map(|j| beta[j] as i64 * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        out.extend(layer);
        layer = next.into_iter().collect();
    }
    sort_roots(&mut out);
    out
}

/// Height first, then reverse-lexicographic on coordinates so that
/// `α_1, α_2, …` come in index order.
fn sort_roots(roots: &mut [Vec<u32>]) {
    roots.sort_by(|a, b| {
        let ha: u32 = a.iter().sum();
        let hb: u32 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
}

/// Builds the root system for a label such as `"G2"` or `"A1xA2"`.
pub fn build_root_system(label: &str) -> Result<RootSystem> {
    let label: Label = label.parse()?;
    Ok(build_from_label(&label))
}

pub fn build_from_label(label: &Label) -> RootSystem {
    let mut parts = label.0.iter().map(|t| RootSystem::from_gram(Label(vec![*t]), t.gram(), None));
    let first = parts.next().expect("labels are nonempty");
    parts.fold(first, |acc, b| direct_sum(&acc, &b))
}

/// Same construction with simple roots tried in the order `order`.
pub fn build_with_order(t: SimpleType, order: &[usize]) -> RootSystem {
    RootSystem::from_gram(Label(vec![t]), t.gram(), Some(order))
}

/// `a ⊕ b`: block-diagonal Cartan data, roots `(Φ_a⁺, 0) ∪ (0, Φ_b⁺)`.
pub fn direct_sum(a: &RootSystem, b: &RootSystem) -> RootSystem {
    let (ra, rb) = (a.rank, b.rank);
    let r = ra + rb;
    let block = |x: &[Vec<Rational>], y: &[Vec<Rational>]| -> Vec<Vec<Rational>> {
        let mut g = vec![vec![Rational::zero(); r]; r];
        for i in 0..ra {
            g[i][..ra].clone_from_slice(&x[i]);
        }
        for i in 0..rb {
            g[ra + i][ra..].clone_from_slice(&y[i]);
        }
        g
    };
    let mut cartan = vec![vec![0i64; r]; r];
    for i in 0..ra {
        cartan[i][..ra].copy_from_slice(&a.cartan[i]);
    }
    for i in 0..rb {
        cartan[ra + i][ra..].copy_from_slice(&b.cartan[i]);
    }
    let pad = |v: &[u32], left: bool| -> Vec<u32> {
        let mut out = vec![0; r];
        if left {
            out[..ra].copy_from_slice(v);
        } else {
            out[ra..].copy_from_slice(v);
        }
        out
    };
    let mut positive_roots = Vec::new();
    let mut coroot_coords = Vec::new();
    let mut root_lengths = Vec::new();
    for k in 0..a.n_positive() {
        positive_roots.push(pad(&a.positive_roots[k], true));
        coroot_coords.push(pad(&a.coroot_coords[k], true));
        root_lengths.push(a.root_lengths[k].clone());
    }
    for k in 0..b.n_positive() {
        positive_roots.push(pad(&b.positive_roots[k], false));
        coroot_coords.push(pad(&b.coroot_coords[k], false));
        root_lengths.push(b.root_lengths[k].clone());
    }
    let mut label = a.label.0.clone();
    label.extend_from_slice(&b.label.0);
    RootSystem {
        label: Label(label),
        rank: r,
        cartan,
        positive_roots,
        coroot_coords,
        root_lengths,
        gram: block(&a.gram, &b.gram),
    }
}

/// The pairing matrix `(λ_i, α^∨)`: rows are fundamental weights, columns
/// are positive roots in the order of [`RootSystem::positive_roots`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightMatrix {
    pub entries: Vec<Vec<u32>>,
}

impl WeightMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn column(&self, k: usize) -> Vec<u32> {
        self.entries.iter().map(|row| row[k]).collect()
    }
}

pub fn weight_matrix(rs: &RootSystem) -> WeightMatrix {
    let entries = (0..rs.rank).map(|i| rs.coroot_coords.iter().map(|c| c[i]).collect()).collect();
    WeightMatrix { entries }
}

/// `K = Π_{α∈Φ⁺} (λ_1 + ⋯ + λ_r, α^∨)`.
pub fn witten_constant(rs: &RootSystem) -> BigUint {
    rs.coroot_coords.iter().map(|c| BigUint::from(c.iter().sum::<u32>())).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wm(label: &str) -> Vec<Vec<u32>> {
        weight_matrix(&build_root_system(label).unwrap()).entries
    }

    #[test]
    fn positive_root_counts() {
        for (label, n) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("A5", 15),
            ("B2", 4),
            ("B3", 9),
            ("B4", 16),
            ("C2", 4),
            ("C3", 9),
            ("C4", 16),
            ("D4", 12),
            ("D5", 20),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
        ] {
            assert_eq!(build_root_system(label).unwrap().n_positive(), n, "{label}");
        }
    }

    #[test]
    fn small_examples() {
        let a1 = build_root_system("A1").unwrap();
        assert_eq!(a1.positive_roots, vec![vec![1]]);
        assert_eq!(wm("A1"), vec![vec![1]]);
        assert_eq!(wm("A2"), vec![vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(wm("A1xA1"), vec![vec![1, 0], vec![0, 1]]);
        let s = build_root_system("A1xA2").unwrap();
        assert_eq!((s.rank, s.n_positive()), (3, 4));
    }

    #[test]
    fn b2_coroots_follow_length_ratio() {
        let b2 = build_root_system("B2").unwrap();
        assert_eq!(b2.positive_roots, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]);
        assert_eq!(b2.coroot_coords, vec![vec![1, 0], vec![0, 1], vec![2, 1], vec![1, 1]]);
        assert_eq!(b2.cartan, vec![vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn g2_roots() {
        let g2 = build_root_system("G2").unwrap();
        let expect: Vec<Vec<u32>> = vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1], vec![3, 1], vec![3, 2]];
        assert_eq!(g2.positive_roots, expect);
        // Highest root 3α1+2α2 is long; its coroot is α1^∨ + 2α2^∨.
        assert_eq!(g2.coroot_coords[5], vec![1, 2]);
    }

    #[test]
    fn names_and_errors() {
        assert_eq!(build_root_system("sl3").unwrap().label.to_string(), "A2");
        assert_eq!(build_root_system("so5").unwrap().label.to_string(), "B2");
        assert_eq!(build_root_system("sp6").unwrap().label.to_string(), "C3");
        assert_eq!(build_root_system("so8").unwrap().label.to_string(), "D4");
        assert!(matches!(build_root_system("D3"), Err(Error::InvalidRank { .. })));
        assert!(matches!(build_root_system("G3"), Err(Error::InvalidRank { .. })));
        assert!(matches!(build_root_system("A0"), Err(Error::InvalidRank { .. })));
        assert!(matches!(build_root_system("Q2"), Err(Error::InvalidLabel(_))));
        assert!(matches!(build_root_system("A1x"), Err(Error::InvalidLabel(_))));
    }

    #[test]
    fn weight_matrix_invariants() {
        for label in ["A3", "B3", "C3", "D4", "G2", "F4", "E6", "A1xB2"] {
            let rs = build_root_system(label).unwrap();
            let m = weight_matrix(&rs);
            for (k, root) in rs.positive_roots.iter().enumerate() {
                if root.iter().sum::<u32>() == 1 {
                    assert_eq!(&m.column(k), root, "{label}");
                }
            }
            assert!(m.entries.iter().all(|row| row.iter().any(|&e| e > 0)));
            assert_eq!(rs.positive_roots[..rs.rank].iter().map(|r| r.iter().position(|&c| c == 1).unwrap()).collect::<Vec<_>>(), (0..rs.rank).collect::<Vec<_>>());
        }
    }

    #[test]
    fn closure_is_order_independent() {
        for t in [SimpleType::new('B', 3).unwrap(), SimpleType::new('G', 2).unwrap(), SimpleType::new('F', 4).unwrap(), SimpleType::new('D', 5).unwrap()] {
            let base = build_with_order(t, &(0..t.rank).collect::<Vec<_>>());
            let rev: Vec<usize> = (0..t.rank).rev().collect();
            assert_eq!(build_with_order(t, &rev).positive_roots, base.positive_roots, "{t}");
        }
    }

    #[test]
    fn dual_types_swap_roots_and_coroots() {
        let b = build_root_system("B3").unwrap();
        let c = build_root_system("C3").unwrap();
        let bs: BTreeSet<_> = b.coroot_coords.iter().cloned().collect();
        let cs: BTreeSet<_> = c.positive_roots.iter().cloned().collect();
        assert_eq!(bs, cs);
    }

    #[test]
    fn witten_constants() {
        assert_eq!(witten_constant(&build_root_system("A1").unwrap()), BigUint::from(1u32));
        assert_eq!(witten_constant(&build_root_system("A2").unwrap()), BigUint::from(2u32));
        assert_eq!(witten_constant(&build_root_system("A1xA1").unwrap()), BigUint::from(1u32));
    }
}

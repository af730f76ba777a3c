/// How an injection `{1..Z+1} → {1..n}` is extended to a permutation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Completion {
    /// Remaining indices in increasing order.
    #[default]
    Increasing,
    /// Remaining indices in decreasing order.
    Decreasing,
}

/// A permutation of `0..n` whose first `Z+1` values are the injection proper.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Injection {
    pub gamma: Vec<usize>,
    pub head: usize,
}

impl Injection {
    pub fn head(&self) -> &[usize] {
        &self.gamma[..self.head]
    }
}

/// `n(n−1)⋯(n−Z)`, saturating.
pub fn injection_count(n: usize, z: usize) -> u128 {
    (0..=z).fold(1u128, |acc, j| acc.saturating_mul(n.saturating_sub(j) as u128))
}

/// All injections `{1..Z+1} → {1..n}` (0-based), in lexicographic order of
/// their first `Z+1` values, each completed per `completion`.
pub fn enumerate_injections(n: usize, z: usize, completion: Completion) -> impl Iterator<Item = Injection> {
    assert!(z < n, "Z must be below n");
    let q = z + 1;
    let mut stack: Vec<usize> = Vec::with_capacity(q);
    let mut out = Vec::new();
    fn rec(n: usize, q: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if stack.len() == q {
            out.push(stack.clone());
            return;
        }
        for k in 0..n {
            if !stack.contains(&k) {
                stack.push(k);
                rec(n, q, stack, out);
                stack.pop();
            }
        }
    }
    rec(n, q, &mut stack, &mut out);
    out.into_iter().map(move |head| {
        let mut rest: Vec<usize> = (0..n).filter(|k| !head.contains(k)).collect();
        if completion == Completion::Decreasing {
            rest.reverse();
        }
        let mut gamma = head;
        gamma.extend(rest);
        Injection { gamma, head: q }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let v: Vec<_> = enumerate_injections(2, 0, Completion::Increasing).map(|i| i.gamma).collect();
        assert_eq!(v, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(enumerate_injections(3, 1, Completion::Increasing).count(), 6);
        assert_eq!(enumerate_injections(4, 3, Completion::Increasing).count(), 24);
        assert_eq!(injection_count(4, 3), 24);
        assert_eq!(injection_count(7, 1), 42);
    }

    #[test]
    fn completions_and_order() {
        let inc: Vec<_> = enumerate_injections(4, 0, Completion::Increasing).collect();
        let dec: Vec<_> = enumerate_injections(4, 0, Completion::Decreasing).collect();
        assert_eq!(inc[1].gamma, vec![1, 0, 2, 3]);
        assert_eq!(dec[1].gamma, vec![1, 3, 2, 0]);
        let heads: Vec<Vec<usize>> = enumerate_injections(4, 1, Completion::Increasing).map(|i| i.head().to_vec()).collect();
        let mut sorted = heads.clone();
        sorted.sort();
        assert_eq!(heads, sorted);
        for inj in enumerate_injections(5, 2, Completion::Decreasing) {
            let mut g = inj.gamma.clone();
            g.sort();
            assert_eq!(g, (0..5).collect::<Vec<_>>());
        }
    }
}

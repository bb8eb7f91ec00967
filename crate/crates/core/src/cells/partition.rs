use std::fmt;

use serde::{Deserialize, Serialize};

/// An integer partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Beta-numbers `λᵢ + (k − i)` for `i = 1..k`, largest first.
    pub fn beta_numbers(&self, k: usize) -> Vec<u32> {
        assert!(k >= self.len());
        (0..k)
            .map(|i| self.0.get(i).copied().unwrap_or(0) + (k - 1 - i) as u32)
            .collect()
    }

    pub fn from_beta_numbers(beta: &[u32]) -> Self {
        let mut b = beta.to_vec();
        b.sort_unstable_by(|x, y| y.cmp(x));
        let k = b.len();
        Self::new(b.iter().enumerate().map(|(i, x)| x - (k - 1 - i) as u32).collect())
    }

    /// Boxes `(row, column)` that can be removed leaving a partition.
    pub fn removable_boxes(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&r| r + 1 == self.len() || self.0[r + 1] < self.0[r])
            .map(|r| (r, self.0[r] as usize - 1))
            .collect()
    }

    /// Content `column − row` of a box.
    pub fn content(row: usize, col: usize) -> i64 {
        col as i64 - row as i64
    }

    /// Rows of content residues mod 2, top row of the drawing first and the
    /// first part at the bottom.
    pub fn residue_diagram(&self) -> String {
        if self.is_empty() {
            return "∅".into();
        }
        self.0
            .iter()
            .enumerate()
            .rev()
            .map(|(r, &len)| {
                (0..len as usize)
                    .map(|c| if Self::content(r, c).rem_euclid(2) == 0 { '0' } else { '1' })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A pair of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub lambda: Partition,
    pub mu: Partition,
}

impl Bipartition {
    pub fn new(lambda: Partition, mu: Partition) -> Self {
        Self { lambda, mu }
    }

    pub fn size(&self) -> u32 {
        self.lambda.size() + self.mu.size()
    }

    /// All bipartitions of `n`, by increasing `|λ|`.
    pub fn all(n: u32) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for k in 0..=n {
            for l in Partition::all(k) {
                for m in Partition::all(n - k) {
                    out.push(Bipartition::new(l.clone(), m));
                }
            }
        }
        out
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lambda, self.mu)
    }
}

/// Which abacus runner carries the first component of a bipartition, for an
/// even number of beta-numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RunnerConvention {
    #[default]
    LambdaOdd,
    LambdaEven,
}

fn even_bead_count(lambda: &Partition) -> usize {
    lambda.len() + lambda.len() % 2
}

fn runners(lambda: &Partition) -> [Vec<u32>; 2] {
    let mut r = [Vec::new(), Vec::new()];
    for b in lambda.beta_numbers(even_bead_count(lambda)) {
        r[(b % 2) as usize].push(b / 2);
    }
    r
}

/// The partition read off the positions of beads on one runner.
fn runner_partition(positions: &[u32]) -> Partition {
    Partition::from_beta_numbers(positions)
}

/// Removes all rim 2-hooks.
pub fn two_core(lambda: &Partition) -> Partition {
    let [even, odd] = runners(lambda);
    let beta: Vec<u32> = (0..even.len() as u32)
        .map(|p| 2 * p)
        .chain((0..odd.len() as u32).map(|p| 2 * p + 1))
        .collect();
    Partition::from_beta_numbers(&beta)
}

pub fn two_quotient(lambda: &Partition) -> Bipartition {
    two_quotient_with(lambda, RunnerConvention::LambdaOdd)
}

pub fn two_quotient_with(lambda: &Partition, conv: RunnerConvention) -> Bipartition {
    let [even, odd] = runners(lambda);
    let (e, o) = (runner_partition(&even), runner_partition(&odd));
    match conv {
        RunnerConvention::LambdaOdd => Bipartition::new(o, e),
        RunnerConvention::LambdaEven => Bipartition::new(e, o),
    }
}

/// The partition of `2n` with trivial 2-core and the given 2-quotient.
pub fn tau(bp: &Bipartition) -> Partition {
    tau_with(bp, RunnerConvention::LambdaOdd)
}

pub fn tau_with(bp: &Bipartition, conv: RunnerConvention) -> Partition {
    let (odd, even) = match conv {
        RunnerConvention::LambdaOdd => (&bp.lambda, &bp.mu),
        RunnerConvention::LambdaEven => (&bp.mu, &bp.lambda),
    };
    let k = odd.len().max(even.len());
    let beta: Vec<u32> = odd
        .beta_numbers(k)
        .into_iter()
        .map(|p| 2 * p + 1)
        .chain(even.beta_numbers(k).into_iter().map(|p| 2 * p))
        .collect();
    Partition::from_beta_numbers(&beta)
}

/// Repeatedly removes every removable box whose content is congruent mod
/// `ell` to one of `residues`.
pub fn j_heart_with(lambda: &Partition, residues: &[u32], ell: u32) -> Partition {
    let mut parts = lambda.parts().to_vec();
    loop {
        let current = Partition(parts.clone());
        let remove: Vec<usize> = current
            .removable_boxes()
            .into_iter()
            .filter(|&(r, c)| residues.contains(&(Partition::content(r, c).rem_euclid(ell as i64) as u32)))
            .map(|(r, _)| r)
            .collect();
        if remove.is_empty() {
            return current;
        }
        for r in remove {
            parts[r] -= 1;
        }
        parts.retain(|&p| p > 0);
    }
}

/// The `{0}`-heart for `ℓ = 2`.
pub fn j_heart(lambda: &Partition) -> Partition {
    j_heart_with(lambda, &[0], 2)
}

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Bipartition;

/// A defect-one symbol: two strictly increasing rows of non-negative
/// integers with one more entry on top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symbol {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl Symbol {
    pub fn defect(&self) -> i64 {
        self.top.len() as i64 - self.bottom.len() as i64
    }

    pub fn is_valid(&self) -> bool {
        let increasing = |r: &[u32]| r.windows(2).all(|w| w[0] < w[1]);
        self.defect() == 1 && increasing(&self.top) && increasing(&self.bottom)
    }

    /// All entries of both rows, sorted, with multiplicity.
    pub fn entries(&self) -> Vec<u32> {
        let mut e: Vec<u32> = self.top.iter().chain(&self.bottom).copied().collect();
        e.sort_unstable();
        e
    }

    /// The equivalent symbol with `m + 1` entries on top: each shift puts
    /// a zero in front of both rows and raises the other entries by one.
    pub fn shifted_to(&self, m: usize) -> Symbol {
        let k = m + 1 - self.top.len().min(m + 1);
        let shift = |r: &[u32]| -> Vec<u32> { (0..k as u32).chain(r.iter().map(|x| x + k as u32)).collect() };
        Symbol {
            top: shift(&self.top),
            bottom: shift(&self.bottom),
        }
    }

    /// `Σ min(x, y)` over pairs of entries, minus `Σ_{i=1}^{m} C(2i−1, 2)`
    /// where the symbol has `2m + 1` entries.
    pub fn a_value(&self) -> u64 {
        let z = self.entries();
        let n = z.len();
        let pairs: u64 = z.iter().enumerate().map(|(i, &x)| x as u64 * (n - 1 - i) as u64).sum();
        let m = (n as u64 - 1) / 2;
        let shift: u64 = (1..=m).map(|i| (2 * i - 1) * (2 * i - 2) / 2).sum();
        pairs - shift
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u32]| {
            if r.is_empty() {
                "-".to_string()
            } else {
                r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
            }
        };
        write!(f, "{} / {}", row(&self.top), row(&self.bottom))
    }
}

/// Pads the increasing rows of `λ` and `μ` with leading zeros to lengths
/// `L` and `L − 1`, `L = max(ℓ(λ), ℓ(μ) + 1)`, then adds `0, 1, 2, …`.
pub fn symbol_of(bp: &Bipartition) -> Symbol {
    let len = bp.lambda.len().max(bp.mu.len() + 1);
    let row = |parts: &[u32], target: usize| -> Vec<u32> {
        let mut inc: Vec<u32> = vec![0; target - parts.len()];
        inc.extend(parts.iter().rev());
        inc.iter().enumerate().map(|(i, p)| p + i as u32).collect()
    };
    Symbol {
        top: row(bp.lambda.parts(), len),
        bottom: row(bp.mu.parts(), len - 1),
    }
}

/// Entry multiset of the symbol, shifted to `2n + 1` entries so that
/// symbols of the same rank compare directly.
pub fn family_key(bp: &Bipartition) -> Vec<u32> {
    symbol_of(bp).shifted_to(bp.size() as usize).entries()
}

/// Groups bipartitions of `n` by the entry multiset of their symbols.
pub fn families(n: u32) -> Vec<Vec<Bipartition>> {
    let mut groups: BTreeMap<Vec<u32>, Vec<Bipartition>> = BTreeMap::new();
    for bp in Bipartition::all(n) {
        groups.entry(family_key(&bp)).or_default().push(bp);
    }
    groups.into_values().collect()
}

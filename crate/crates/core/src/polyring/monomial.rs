use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Upper bound on the number of variables of any ring.
pub const MAX_VARS: usize = 12;

/// Dense exponent vector with a cached total degree.
///
/// Unused trailing slots are always zero, so comparisons never need the
/// ring's variable count.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    deg: u32,
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Self::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m.deg = exps.iter().map(|&e| e as u32).sum();
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn partial_degree(&self, vars: std::ops::Range<usize>) -> u32 {
        self.exps[vars].iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Bitmask of variables with positive exponent.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = out.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent overflow");
        }
        out.deg += other.deg;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = *other;
        for i in 0..MAX_VARS {
            out.exps[i] -= self.exps[i];
        }
        out.deg -= self.deg;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::one();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            out.deg += out.exps[i] as u32;
        }
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    pub fn with_exponent(&self, i: usize, e: u16) -> Monomial {
        let mut out = *self;
        out.deg = out.deg - out.exps[i] as u32 + e as u32;
        out.exps[i] = e;
        out
    }

    /// All monomials in the variables `vars` of total degree `d`, in
    /// lexicographically decreasing exponent order.
    pub fn all_of_degree(vars: &[usize], d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        fn rec(vars: &[usize], d: u32, cur: Monomial, out: &mut Vec<Monomial>) {
            match vars {
                [] => {
                    if d == 0 {
                        out.push(cur)
                    }
                }
                [last] => out.push(cur.with_exponent(*last, d as u16)),
                [first, rest @ ..] => {
                    for e in (0..=d).rev() {
                        rec(rest, d - e, cur.with_exponent(*first, e as u16), out);
                    }
                }
            }
        }
        rec(vars, d, Monomial::one(), &mut out);
        out
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// Monomial orders. All are multiplicative well-orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Block order: grevlex on the eliminated variables (bitmask) first,
    /// ties broken by grevlex on the rest.
    BlockElim { eliminated: u32 },
    /// Weight vector first, ties broken by grevlex.
    WeightGrevlex { weights: [i32; MAX_VARS] },
}

#[inline]
fn revlex_tail(a: &Monomial, b: &Monomial, mask: u32) -> Ordering {
    for i in (0..MAX_VARS).rev() {
        if mask & (1 << i) == 0 {
            continue;
        }
        let (x, y) = (a.exps[i], b.exps[i]);
        if x != y {
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}

fn masked_degree(m: &Monomial, mask: u32) -> u32 {
    (0..MAX_VARS)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| m.exps[i] as u32)
        .sum()
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a
                .deg
                .cmp(&b.deg)
                .then_with(|| revlex_tail(a, b, u32::MAX)),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::BlockElim { eliminated } => {
                let e = *eliminated;
                masked_degree(a, e)
                    .cmp(&masked_degree(b, e))
                    .then_with(|| revlex_tail(a, b, e))
                    .then_with(|| a.deg.cmp(&b.deg))
                    .then_with(|| revlex_tail(a, b, !e))
            }
            MonomialOrder::WeightGrevlex { weights } => {
                let w = |m: &Monomial| -> i64 {
                    (0..MAX_VARS).map(|i| weights[i] as i64 * m.exps[i] as i64).sum()
                };
                w(a).cmp(&w(b))
                    .then_with(|| a.deg.cmp(&b.deg))
                    .then_with(|| revlex_tail(a, b, u32::MAX))
            }
        }
    }

    /// Textual name used in JSON documents: `grevlex`, `lex`,
    /// `elim:i,j,..` (0-based variable indices) or `weight:w1,w2,..`.
    pub fn name(&self, nvars: usize) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::BlockElim { eliminated } => {
                let idx: Vec<String> = (0..MAX_VARS)
                    .filter(|i| eliminated & (1 << i) != 0)
                    .map(|i| i.to_string())
                    .collect();
                format!("elim:{}", idx.join(","))
            }
            MonomialOrder::WeightGrevlex { weights } => {
                let w: Vec<String> = weights[..nvars].iter().map(|w| w.to_string()).collect();
                format!("weight:{}", w.join(","))
            }
        }
    }

    pub fn parse_name(s: &str) -> Option<MonomialOrder> {
        let s = s.trim();
        match s {
            "grevlex" => return Some(MonomialOrder::Grevlex),
            "lex" => return Some(MonomialOrder::Lex),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("elim:") {
            let mut mask = 0u32;
            for part in rest.split(',').filter(|p| !p.is_empty()) {
                let i: usize = part.trim().parse().ok()?;
                if i >= MAX_VARS {
                    return None;
                }
                mask |= 1 << i;
            }
            return Some(MonomialOrder::BlockElim { eliminated: mask });
        }
        if let Some(rest) = s.strip_prefix("weight:") {
            let mut weights = [0i32; MAX_VARS];
            for (i, part) in rest.split(',').enumerate() {
                if i >= MAX_VARS {
                    return None;
                }
                weights[i] = part.trim().parse().ok()?;
            }
            return Some(MonomialOrder::WeightGrevlex { weights });
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        // x^2 > xy > y^2 > xz > yz > z^2 in three variables
        let seq = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        for w in seq.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater, "{:?} vs {:?}", w[0], w[1]);
        }
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[1, 1, 0])), Ordering::Less);
    }

    #[test]
    fn elimination_order_puts_eliminated_first() {
        let o = MonomialOrder::BlockElim { eliminated: 1 << 2 };
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0, 1]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Monomial::all_of_degree(&[0, 1, 2], 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(&[0, 1, 2, 3, 4, 5], 10).len(), 3003);
        assert_eq!(Monomial::all_of_degree(&[], 0), vec![Monomial::one()]);
        assert!(Monomial::all_of_degree(&[], 1).is_empty());
    }

    #[test]
    fn order_names_roundtrip() {
        for o in [
            MonomialOrder::Grevlex,
            MonomialOrder::Lex,
            MonomialOrder::BlockElim { eliminated: 0b1001 },
        ] {
            assert_eq!(MonomialOrder::parse_name(&o.name(4)), Some(o));
        }
    }
}

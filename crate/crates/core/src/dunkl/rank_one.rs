//! Words in `x`, `x⁻¹`, `∂`, `s` for the rank-one algebra
//! `ℚ[x, x⁻¹][∂] ⋊ S₂`, with `s x = −x s` and `s ∂ = −∂ s`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::polyring::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::rational::Rational;

/// `Σ c · x^a ∂^b s^e` in normal order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RankOneOperator {
    terms: BTreeMap<(i32, u32, bool), Rational>,
}

fn falling(a: i32, k: u32) -> Rational {
    (0..k as i64).fold(Rational::ONE, |acc, i| &acc * &Rational::from_int(a as i64 - i))
}

fn binomial(n: u32, k: u32) -> Rational {
    (0..k as i64).fold(Rational::ONE, |acc, i| {
        &(&acc * &Rational::from_int(n as i64 - i)) / &Rational::from_int(i + 1)
    })
}

impl RankOneOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(c: Rational, a: i32, b: u32, s: bool) -> Self {
        let mut out = Self::default();
        out.add_term((a, b, s), c);
        out
    }

    pub fn one() -> Self {
        Self::term(Rational::ONE, 0, 0, false)
    }

    pub fn x() -> Self {
        Self::term(Rational::ONE, 1, 0, false)
    }

    pub fn d() -> Self {
        Self::term(Rational::ONE, 0, 1, false)
    }

    pub fn s() -> Self {
        Self::term(Rational::ONE, 0, 0, true)
    }

    /// `D_y = ∂ − (c/x)(1 − s)`.
    pub fn dunkl(c: &Rational) -> Self {
        let mut out = Self::d();
        out.add_term((-1, 0, false), -c);
        out.add_term((-1, 0, true), c.clone());
        out
    }

    fn add_term(&mut self, key: (i32, u32, bool), c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert(Rational::ZERO);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, u32, bool), &Rational)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&(a, b, e), c) in &self.terms {
            for (&(a2, b2, e2), c2) in &other.terms {
                let mut coeff = c * c2;
                if e && (a2 + b2 as i32).rem_euclid(2) == 1 {
                    coeff = -coeff;
                }
                for k in 0..=b {
                    let w = &binomial(b, k) * &falling(a2, k);
                    if w.is_zero() {
                        continue;
                    }
                    out.add_term((a + a2 - k as i32, b - k + b2, e ^ e2), &coeff * &w);
                }
            }
        }
        out
    }

    /// Order in the filtration where `∂` has order one and `x^{±1}`, `s`
    /// have order zero; `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn top_order_part(&self) -> Self {
        let Some(top) = self.order() else {
            return Self::default();
        };
        Self {
            terms: self.terms.iter().filter(|(k, _)| k.1 == top).map(|(k, v)| (*k, v.clone())).collect(),
        }
    }

    /// The top-order part as a polynomial in `x1, y1` (with `∂ ↦ y1`),
    /// when it is free of `s` and of negative powers of `x`.
    pub fn symbol(&self, ring: Ring) -> Option<Polynomial> {
        let top = self.top_order_part();
        let mut terms = Vec::new();
        for (&(a, b, s), c) in &top.terms {
            if s || a < 0 {
                return None;
            }
            terms.push((Monomial::from_exponents(&[a as u16, b as u16]), c.clone()));
        }
        Some(Polynomial::from_terms(ring, terms))
    }

    /// The image of `x^k`, as Laurent coefficients by exponent.
    pub fn apply_to_power(&self, k: i32) -> BTreeMap<i32, Rational> {
        let mut out: BTreeMap<i32, Rational> = BTreeMap::new();
        for (&(a, b, s), c) in &self.terms {
            let mut coeff = c * &falling(k, b);
            if s && k.rem_euclid(2) == 1 {
                coeff = -coeff;
            }
            if coeff.is_zero() {
                continue;
            }
            let e = out.entry(a + k - b as i32).or_insert(Rational::ZERO);
            *e = &*e + &coeff;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

impl fmt::Display for RankOneOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(a, b, s), c)| {
                let mut factors = Vec::new();
                if !c.is_one() {
                    factors.push(format!("({c})"));
                }
                if a != 0 {
                    factors.push(if a == 1 { "x".into() } else { format!("x^{a}") });
                }
                if b != 0 {
                    factors.push(if b == 1 { "D".into() } else { format!("D^{b}") });
                }
                if s {
                    factors.push("s".into());
                }
                if factors.is_empty() {
                    "1".into()
                } else {
                    factors.join("*")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A letter of a Dunkl word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Letter {
    X,
    Dunkl,
}

/// Evaluates a word in the algebra and, alongside, the commutative symbol
/// obtained by reading `x ↦ x1`, `D_y ↦ y1`.
pub fn evaluate_word(word: &[Letter], c: &Rational) -> (RankOneOperator, (u32, u32)) {
    let dy = RankOneOperator::dunkl(c);
    let mut op = RankOneOperator::one();
    let mut symbol = (0, 0);
    for l in word {
        match l {
            Letter::X => {
                op = op.mul(&RankOneOperator::x());
                symbol.0 += 1;
            }
            Letter::Dunkl => {
                op = op.mul(&dy);
                symbol.1 += 1;
            }
        }
    }
    (op, symbol)
}

/// `x^i D_y^j x^k` as a word.
pub fn chain_word(i: u32, j: u32, k: u32) -> Vec<Letter> {
    let mut w = vec![Letter::X; i as usize];
    w.extend(std::iter::repeat_n(Letter::Dunkl, j as usize));
    w.extend(std::iter::repeat_n(Letter::X, k as usize));
    w
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolCheck {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub order: Option<u32>,
    pub symbol: Option<String>,
    pub expected: String,
    pub passed: bool,
}

/// For every `i + j = k ≤ max_k`, checks that the top-order symbol of
/// `x^i D_y^j x^k` is `x^i y^j x^k`.
pub fn rank_one_symbol_checks(c: &Rational, max_k: u32) -> Vec<SymbolCheck> {
    let ring = Ring::new(1, MonomialOrder::Grevlex);
    let mut out = Vec::new();
    for k in 1..=max_k {
        for j in 0..=k {
            let i = k - j;
            let (op, (sx, sy)) = evaluate_word(&chain_word(i, j, k), c);
            let expected = Polynomial::monomial(ring, Monomial::from_exponents(&[sx as u16, sy as u16]), Rational::ONE);
            let symbol = op.symbol(ring);
            let passed = op.order() == Some(j) && symbol.as_ref() == Some(&expected);
            out.push(SymbolCheck {
                i,
                j,
                k,
                order: op.order(),
                symbol: symbol.map(|p| p.to_string()),
                expected: expected.to_string(),
                passed,
            });
        }
    }
    out
}

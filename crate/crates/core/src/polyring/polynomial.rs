use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use super::PolyError;
use crate::rational::Rational;

/// Ring context: `rank` x-variables, `rank` y-variables and `extra`
/// auxiliary variables `t1..`, in that index order, plus the active order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    rank: u8,
    extra: u8,
    order: MonomialOrder,
}

impl Ring {
    pub fn new(rank: usize, order: MonomialOrder) -> Self {
        Self::with_extra(rank, 0, order)
    }

    /// Panics if the variable count exceeds [`MAX_VARS`].
    pub fn with_extra(rank: usize, extra: usize, order: MonomialOrder) -> Self {
        assert!(2 * rank + extra <= MAX_VARS, "too many variables");
        Self {
            rank: rank as u8,
            extra: extra as u8,
            order,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn extra(&self) -> usize {
        self.extra as usize
    }

    pub fn nvars(&self) -> usize {
        2 * self.rank as usize + self.extra as usize
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring { order, ..*self }
    }

    pub fn with_extra_vars(&self, extra: usize) -> Ring {
        Ring::with_extra(self.rank(), extra, self.order)
    }

    pub fn x_vars(&self) -> std::ops::Range<usize> {
        0..self.rank()
    }

    pub fn y_vars(&self) -> std::ops::Range<usize> {
        self.rank()..2 * self.rank()
    }

    pub fn var_name(&self, i: usize) -> String {
        let n = self.rank();
        if i < n {
            format!("x{}", i + 1)
        } else if i < 2 * n {
            format!("y{}", i - n + 1)
        } else {
            format!("t{}", i - 2 * n + 1)
        }
    }

    pub fn var_names(&self) -> Vec<String> {
        (0..self.nvars()).map(|i| self.var_name(i)).collect()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        let (kind, num) = name.split_at(1);
        let k: usize = num.parse().ok()?;
        if k == 0 {
            return None;
        }
        let n = self.rank();
        match kind {
            "x" if k <= n => Some(k - 1),
            "y" if k <= n => Some(n + k - 1),
            "t" if k <= self.extra() => Some(2 * n + k - 1),
            _ => None,
        }
    }

    pub fn bidegree(&self, m: &Monomial) -> (u32, u32) {
        (m.partial_degree(self.x_vars()), m.partial_degree(self.y_vars()))
    }

    /// All monomials of total degree `d` in the ring's variables.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let vars: Vec<usize> = (0..self.nvars()).collect();
        Monomial::all_of_degree(&vars, d)
    }

    /// All monomials of bidegree `(a, b)` (auxiliary variables absent).
    pub fn monomials_of_bidegree(&self, a: u32, b: u32) -> Vec<Monomial> {
        let xs: Vec<usize> = self.x_vars().collect();
        let ys: Vec<usize> = self.y_vars().collect();
        let mut out = Vec::new();
        for mx in Monomial::all_of_degree(&xs, a) {
            for my in Monomial::all_of_degree(&ys, b) {
                out.push(mx.mul(&my));
            }
        }
        out
    }

    fn check(&self, other: &Ring) -> Result<(), PolyError> {
        if self == other {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: Rational,
}

/// Polynomial with rational coefficients. Terms are nonzero and sorted in
/// strictly decreasing order under the ring's monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Self { ring, terms: Vec::new() }
    }

    pub fn constant(ring: Ring, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(), c)
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, Rational::ONE)
    }

    pub fn monomial(ring: Ring, mono: Monomial, coeff: Rational) -> Self {
        if coeff.is_zero() {
            return Self::zero(ring);
        }
        Self { ring, terms: vec![Term { mono, coeff }] }
    }

    pub fn var(ring: Ring, i: usize) -> Self {
        assert!(i < ring.nvars());
        Self::monomial(ring, Monomial::var(i), Rational::ONE)
    }

    /// Linear form `Σ coeffs[i] * var(first + i)`.
    pub fn linear_form(ring: Ring, first: usize, coeffs: &[Rational]) -> Self {
        Self::from_terms(
            ring,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(first + i), c.clone())),
        )
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            let e = acc.entry(m).or_insert(Rational::ZERO);
            *e = &*e + &c;
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: Ring, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { mono, coeff })
            .collect();
        let order = ring.order();
        terms.sort_unstable_by(|a, b| order.cmp(&b.mono, &a.mono));
        Self { ring, terms }
    }

    /// Trusts the caller that `terms` is already canonical.
    pub(crate) fn from_sorted_terms(ring: Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Self { ring, terms }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.mono)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|t| t.mono == *m)
            .map_or(Rational::ZERO, |t| t.coeff.clone())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.mono.degree() == t.mono.degree()),
        }
    }

    /// Homogeneous of a single bidegree and free of auxiliary variables.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let first = self.terms.first()?;
        let bd = self.ring.bidegree(&first.mono);
        let aux = 2 * self.ring.rank()..self.ring.nvars();
        self.terms
            .iter()
            .all(|t| self.ring.bidegree(&t.mono) == bd && t.mono.partial_degree(aux.clone()) == 0)
            .then_some(bd)
    }

    /// Whether any term involves a variable of the bitmask.
    pub fn involves(&self, mask: u32) -> bool {
        self.terms.iter().any(|t| t.mono.support_mask() & mask != 0)
    }

    /// Re-sorts the terms for another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.ring.order() {
            return self.clone();
        }
        let ring = self.ring.with_order(order);
        let mut terms = self.terms.clone();
        terms.sort_unstable_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial { ring, terms }
    }

    /// Moves the polynomial to a ring with the same rank but a different
    /// number of auxiliary variables. Fails if a dropped variable occurs.
    pub fn into_ring(&self, ring: Ring) -> Result<Polynomial, PolyError> {
        if ring.rank() != self.ring.rank() {
            return Err(PolyError::RingMismatch);
        }
        let keep = if ring.nvars() >= 32 { u32::MAX } else { (1u32 << ring.nvars()) - 1 };
        if self.involves(!keep) {
            return Err(PolyError::RingMismatch);
        }
        Ok(Polynomial {
            ring: ring.with_order(self.ring.order()),
            terms: self.terms.clone(),
        }
        .with_order(ring.order()))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|t| Term { mono: t.mono, coeff: &t.coeff * c })
                .collect(),
        }
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    /// Multiplies by the term `c * m`; ordering is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|t| Term { mono: t.mono.mul(m), coeff: &t.coeff * c })
                .collect(),
        }
    }

    /// `self - c * m * g` by a single merge pass.
    pub fn sub_mul_term(&self, c: &Rational, m: &Monomial, g: &Polynomial) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: merge_sub(&self.terms, c, m, &g.terms, self.ring.order()),
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.ring.check(&other.ring)?;
        Ok(self.sub_mul_term(&-Rational::ONE, &Monomial::one(), other))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.ring.check(&other.ring)?;
        Ok(self.sub_mul_term(&Rational::ONE, &Monomial::one(), other))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.ring.check(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.ring));
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let t = &small.terms[0];
            return Ok(big.mul_term(&t.mono, &t.coeff));
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(small.len() * big.len());
        for a in &small.terms {
            for b in &big.terms {
                let e = acc.entry(a.mono.mul(&b.mono)).or_insert(Rational::ZERO);
                *e = e.add_mul(&a.coeff, &b.coeff);
            }
        }
        Ok(Polynomial::from_map(self.ring, acc))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().filter(|t| t.mono.degree() == d).cloned().collect(),
        }
    }

    /// Divides out the content so coefficients are coprime integers with a
    /// positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        use num_traits::{One, Zero};
        if self.is_zero() {
            return self.clone();
        }
        let den = crate::rational::lcm_denominators(self.terms.iter().map(|t| &t.coeff));
        let mut g = num_bigint::BigInt::zero();
        for t in &self.terms {
            let n = (&t.coeff * &Rational::from(den.clone())).numer();
            g = g.gcd(&n);
        }
        if g.is_zero() {
            g = num_bigint::BigInt::one();
        }
        let mut s = Rational::from_bigints(den, g);
        if self.terms[0].coeff.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }
}

pub(crate) fn merge_sub(a: &[Term], c: &Rational, m: &Monomial, b: &[Term], order: MonomialOrder) -> Vec<Term> {
    // a - c*m*b, both inputs sorted decreasingly
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let scaled = |t: &Term| Term { mono: t.mono.mul(m), coeff: -(c * &t.coeff) };
    while i < a.len() && j < b.len() {
        let bm = b[j].mono.mul(m);
        match order.cmp(&a[i].mono, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(scaled(&b[j]));
                j += 1;
            }
            Ordering::Equal => {
                let v = &a[i].coeff - &(c * &b[j].coeff);
                if !v.is_zero() {
                    out.push(Term { mono: bm, coeff: v });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(scaled));
    out
}

macro_rules! panicking_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a> std::ops::$tr<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            /// Panics on a ring mismatch; use the `checked_` variant to recover.
            fn $m(self, rhs: &'a Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl std::ops::$tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$checked(&rhs).expect("polynomial ring mismatch")
            }
        }
    };
}
panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::ONE)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = format_monomial(&self.ring, &t.mono);
            match (abs.is_one(), mono.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (true, false) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn format_monomial(ring: &Ring, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for i in 0..ring.nvars() {
        match m.exponent(i) {
            0 => {}
            1 => parts.push(ring.var_name(i)),
            e => parts.push(format!("{}^{}", ring.var_name(i), e)),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::new(1, MonomialOrder::Grevlex)
    }

    #[test]
    fn additive_inverse_and_identity() {
        let r = ring();
        let x = Polynomial::var(r, 0);
        let y = Polynomial::var(r, 1);
        assert!((&x + &-&x).is_zero());
        let two_x = Polynomial::var(r, 0).scale(&Rational::from_int(2));
        assert_eq!(&(&x + &y) + &(&x - &y), two_x);
        assert_eq!(&x + &Polynomial::zero(r), x);
    }

    #[test]
    fn products() {
        let r = ring();
        let x = Polynomial::var(r, 0);
        let y = Polynomial::var(r, 1);
        assert_eq!((&x * &y).to_string(), "x1*y1");
        assert_eq!((&(&x - &y) * &(&x + &y)).to_string(), "x1^2 - y1^2");
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Polynomial::var(Ring::new(1, MonomialOrder::Grevlex), 0);
        let b = Polynomial::var(Ring::new(2, MonomialOrder::Grevlex), 0);
        assert_eq!(a.checked_add(&b), Err(PolyError::RingMismatch));
        let c = Polynomial::var(Ring::new(1, MonomialOrder::Lex), 0);
        assert_eq!(a.checked_mul(&c), Err(PolyError::RingMismatch));
    }

    #[test]
    fn primitive_normalises_content_and_sign() {
        let r = ring();
        let p = Polynomial::from_terms(
            r,
            [(Monomial::var(0), Rational::new(-2, 3)), (Monomial::var(1), Rational::new(4, 9))],
        );
        assert_eq!(p.primitive().to_string(), "3*x1 - 2*y1");
    }
}

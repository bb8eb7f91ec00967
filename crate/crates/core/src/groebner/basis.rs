use std::cmp::Ordering;

use crate::polyring::{merge_sub, Monomial, MonomialOrder, Polynomial, Ring, Term};
use crate::rational::Rational;

/// Division of `terms` by monic polynomials supplied through `reducer`.
///
/// With `full` unset only the leading term is reduced (top reduction).
pub(crate) fn reduce_terms<'a>(
    mut p: Vec<Term>,
    order: MonomialOrder,
    full: bool,
    reducer: impl Fn(&Monomial) -> Option<&'a Polynomial>,
) -> Vec<Term> {
    let mut rem: Vec<Term> = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let t = &p[start];
        match reducer(&t.mono) {
            Some(g) => {
                let lead = g.leading_term().expect("reducer is nonzero");
                debug_assert!(lead.coeff.is_one());
                let q = lead.mono.quotient_of(&t.mono).expect("reducer divides");
                let c = t.coeff.clone();
                p = merge_sub(&p[start..], &c, &q, g.terms(), order);
                start = 0;
            }
            None if full => {
                rem.push(p[start].clone());
                start += 1;
            }
            None => break,
        }
    }
    rem.extend_from_slice(&p[start..]);
    rem
}

/// A reduced Gröbner basis, possibly truncated at a degree bound.
///
/// A truncated basis (homogeneous input only) agrees with the full reduced
/// basis in every degree up to the bound; membership and graded dimension
/// queries are exact in that range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    polys: Vec<Polynomial>,
    leads: Vec<(Monomial, u32)>,
    complete: bool,
    degree_bound: Option<u32>,
}

impl GroebnerBasis {
    pub(crate) fn from_reduced(ring: Ring, polys: Vec<Polynomial>, complete: bool, degree_bound: Option<u32>) -> Self {
        let leads = polys
            .iter()
            .map(|g| {
                let m = g.leading_monomial().expect("basis elements are nonzero");
                (m, m.support_mask())
            })
            .collect();
        Self {
            ring,
            polys,
            leads,
            complete,
            degree_bound: if complete { None } else { degree_bound },
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// `None` when complete.
    pub fn degree_bound(&self) -> Option<u32> {
        self.degree_bound
    }

    /// Whether queries in degree `d` are exact.
    pub fn valid_through(&self, d: u32) -> bool {
        self.complete || self.degree_bound.is_some_and(|b| d <= b)
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.leads.iter().map(|(m, _)| m)
    }

    fn reducer(&self, m: &Monomial) -> Option<&Polynomial> {
        let mm = m.support_mask();
        self.leads
            .iter()
            .position(|(l, mask)| mask & !mm == 0 && l.divides(m))
            .map(|i| &self.polys[i])
    }

    /// Whether `m` lies in the leading-term ideal.
    pub fn in_leading_ideal(&self, m: &Monomial) -> bool {
        self.reducer(m).is_some()
    }

    /// Fully reduced remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let order = self.order();
        let f = f.with_order(order);
        let ring = f.ring();
        let rem = reduce_terms(f.into_terms(), order, true, |m| self.reducer(m));
        Polynomial::from_terms(ring, rem.into_iter().map(|t| (t.mono, t.coeff)))
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> bool {
        let order = self.order();
        let f = f.with_order(order);
        reduce_terms(f.into_terms(), order, true, |m| self.reducer(m)).is_empty()
    }

    /// Number of degree-`d` monomials in the leading-term ideal.
    pub fn leading_ideal_count(&self, d: u32) -> usize {
        self.ring
            .monomials_of_degree(d)
            .iter()
            .filter(|m| self.in_leading_ideal(m))
            .count()
    }

    /// Number of bidegree-`(a, b)` monomials in the leading-term ideal.
    pub fn leading_ideal_count_bigraded(&self, a: u32, b: u32) -> usize {
        self.ring
            .monomials_of_bidegree(a, b)
            .iter()
            .filter(|m| self.in_leading_ideal(m))
            .count()
    }

    /// Re-checks Buchberger's criterion on every pair of the basis, up to
    /// the degree bound for truncated bases.
    pub fn verify_s_pairs(&self) -> bool {
        let order = self.order();
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let (a, b) = (&self.leads[i].0, &self.leads[j].0);
                let l = a.lcm(b);
                if !self.valid_through(l.degree()) {
                    continue;
                }
                let qa = a.quotient_of(&l).expect("lcm");
                let qb = b.quotient_of(&l).expect("lcm");
                let lhs = self.polys[i].mul_term(&qa, &Rational::ONE);
                let s = merge_sub(lhs.terms(), &Rational::ONE, &qb, self.polys[j].terms(), order);
                if !reduce_terms(s, order, true, |m| self.reducer(m)).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Checks the reducedness invariant.
    pub fn is_reduced(&self) -> bool {
        let order = self.order();
        for (i, g) in self.polys.iter().enumerate() {
            if !g.leading_coefficient().is_some_and(Rational::is_one) {
                return false;
            }
            for t in g.terms() {
                let hit = self
                    .leads
                    .iter()
                    .enumerate()
                    .any(|(k, (l, _))| k != i && l.divides(&t.mono));
                if hit {
                    return false;
                }
            }
        }
        self.leads
            .windows(2)
            .all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Less)
    }
}

//! Buchberger's algorithm with the Gebauer–Möller pair criteria.

use std::cmp::Ordering;

use super::basis::{reduce_terms, GroebnerBasis};
use super::{guard, GroebnerError};
use crate::polyring::{merge_sub, Monomial, MonomialOrder, Polynomial, Ring, Term};
use crate::rational::Rational;

/// Critical pair selection.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Selection {
    /// Smallest lcm degree first, ties by the monomial order.
    #[default]
    Normal,
    /// Smallest sugar degree first, ties by the monomial order.
    Sugar,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BuchbergerOptions {
    pub selection: Selection,
    /// Stop after degree `d`; only sound for homogeneous input.
    pub degree_bound: Option<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    /// Leading monomials of the input generators that were not already in
    /// the ideal generated by everything processed before them.
    pub essential_generators: Vec<Monomial>,
}

struct Entry {
    poly: Polynomial,
    lm: Monomial,
    mask: u32,
    sugar: u32,
    active: bool,
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State {
    ring: Ring,
    order: MonomialOrder,
    selection: Selection,
    entries: Vec<Entry>,
    pairs: Vec<Pair>,
    stats: BuchbergerStats,
}

impl State {
    fn pair_key(&self, p: &Pair) -> u32 {
        match self.selection {
            Selection::Normal => p.lcm.degree(),
            Selection::Sugar => p.sugar,
        }
    }

    fn next_pair(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (k, p) in self.pairs.iter().enumerate() {
            best = match best {
                None => Some(k),
                Some(b) => {
                    let q = &self.pairs[b];
                    let ord = self
                        .pair_key(p)
                        .cmp(&self.pair_key(q))
                        .then_with(|| self.order.cmp(&p.lcm, &q.lcm));
                    if ord == Ordering::Less {
                        Some(k)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best
    }

    fn find_reducer(&self, m: &Monomial) -> Option<&Polynomial> {
        let mm = m.support_mask();
        self.entries
            .iter()
            .find(|e| e.active && e.mask & !mm == 0 && e.lm.divides(m))
            .map(|e| &e.poly)
    }

    fn reduce(&self, terms: Vec<Term>) -> Vec<Term> {
        reduce_terms(terms, self.order, true, |m| self.find_reducer(m))
    }

    fn s_polynomial(&self, p: &Pair) -> Vec<Term> {
        let (a, b) = (&self.entries[p.i], &self.entries[p.j]);
        let qa = a.lm.quotient_of(&p.lcm).expect("lcm");
        let qb = b.lm.quotient_of(&p.lcm).expect("lcm");
        let lhs = a.poly.mul_term(&qa, &Rational::ONE);
        merge_sub(lhs.terms(), &Rational::ONE, &qb, b.poly.terms(), self.order)
    }

    /// Adds a monic, fully reduced polynomial and updates the pair set.
    fn insert(&mut self, h: Polynomial, sugar: u32) {
        let lm = h.leading_monomial().expect("nonzero");
        let k = self.entries.len();
        self.entries.push(Entry {
            mask: lm.support_mask(),
            lm,
            poly: h,
            sugar,
            active: true,
        });
        let sugar_of = |e: &Entry, lcm: &Monomial| e.sugar - e.lm.degree() + lcm.degree();

        // new pairs (g, h) for active g, filtered by the chain criterion
        let mut cand: Vec<(usize, Monomial, bool)> = self.entries[..k]
            .iter()
            .enumerate()
            .filter(|(_, e)| e.active)
            .map(|(i, e)| (i, e.lm.lcm(&lm), e.lm.is_coprime(&lm)))
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((i, l, coprime)) = (!cand.is_empty()).then(|| cand.remove(0)) {
            let dominated = cand.iter().chain(kept.iter()).any(|(_, l2, _)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((i, l, coprime));
            }
        }

        // old pairs made redundant by h
        let entries = &self.entries;
        self.pairs.retain(|p| {
            if !lm.divides(&p.lcm) {
                return true;
            }
            let li = entries[p.i].lm.lcm(&lm);
            let lj = entries[p.j].lm.lcm(&lm);
            li == p.lcm || lj == p.lcm
        });

        for (i, l, coprime) in kept {
            if !coprime {
                let s = sugar_of(&self.entries[i], &l).max(sugar_of(&self.entries[k], &l));
                self.pairs.push(Pair { i, j: k, lcm: l, sugar: s });
            }
        }

        for e in &mut self.entries[..k] {
            if e.active && lm.divides(&e.lm) {
                e.active = false;
            }
        }
    }

    fn active_count(&self) -> usize {
        self.entries.iter().filter(|e| e.active).count()
    }
}

/// Reduced Gröbner basis of `gens` with respect to `ring`'s order.
pub fn buchberger(ring: Ring, gens: &[Polynomial]) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with(ring, gens, BuchbergerOptions::default()).map(|(b, _)| b)
}

/// Buchberger's algorithm with explicit options, returning statistics.
///
/// Input generators are fed lazily in order of increasing degree and,
/// within a degree, after all critical pairs of that degree. For
/// homogeneous input this makes the degree-`d` state a `d`-truncated
/// Gröbner basis, which is what the degree bound and the essential
/// generator count rely on.
pub fn buchberger_with(
    ring: Ring,
    gens: &[Polynomial],
    opts: BuchbergerOptions,
) -> Result<(GroebnerBasis, BuchbergerStats), GroebnerError> {
    let order = ring.order();
    let mut inputs: Vec<Polynomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if g.ring().with_order(order) != ring {
            return Err(GroebnerError::Poly(crate::polyring::PolyError::RingMismatch));
        }
        if !g.is_zero() {
            inputs.push(g.with_order(order));
        }
    }
    if opts.degree_bound.is_some() && !inputs.iter().all(Polynomial::is_homogeneous) {
        return Err(GroebnerError::NotHomogeneous);
    }
    inputs.sort_by_key(|g| g.degree().unwrap_or(0));

    let mut st = State {
        ring,
        order,
        selection: opts.selection,
        entries: Vec::new(),
        pairs: Vec::new(),
        stats: BuchbergerStats::default(),
    };
    let mut next_input = 0;
    let mut truncated = false;

    loop {
        let pair = st.next_pair();
        let input_deg = inputs.get(next_input).map(|g| g.degree().unwrap_or(0));
        let take_pair = match (pair, input_deg) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(p), Some(d)) => st.pair_key(&st.pairs[p]) <= d,
        };
        let current_deg = if take_pair {
            st.pair_key(&st.pairs[pair.unwrap()])
        } else {
            input_deg.unwrap()
        };
        if let Some(bound) = opts.degree_bound {
            if current_deg > bound {
                truncated = true;
                break;
            }
        }
        guard::check(st.active_count(), current_deg)?;

        let (terms, sugar, from_input) = if take_pair {
            let p = st.pairs.swap_remove(pair.unwrap());
            st.stats.pairs_reduced += 1;
            (st.s_polynomial(&p), p.sugar, false)
        } else {
            let g = inputs[next_input].clone();
            next_input += 1;
            let d = g.degree().unwrap_or(0);
            (g.into_terms(), d, true)
        };
        let reduced = st.reduce(terms);
        if reduced.is_empty() {
            if !from_input {
                st.stats.zero_reductions += 1;
            }
            continue;
        }
        let h = Polynomial::from_sorted_terms(ring, reduced).monic();
        if from_input {
            st.stats.essential_generators.push(h.leading_monomial().expect("nonzero"));
        }
        if h.is_constant() {
            // unit ideal
            let one = Polynomial::one(ring);
            let basis = GroebnerBasis::from_reduced(ring, vec![one], true, None);
            return Ok((basis, st.stats));
        }
        st.insert(h, sugar);
    }

    let polys = interreduce(&st);
    let complete = !truncated;
    let bound = if complete { None } else { opts.degree_bound };
    Ok((GroebnerBasis::from_reduced(ring, polys, complete, bound), st.stats))
}

/// Tail-reduces the active elements against each other and sorts them by
/// increasing leading monomial.
fn interreduce(st: &State) -> Vec<Polynomial> {
    let mut active: Vec<&Entry> = st.entries.iter().filter(|e| e.active).collect();
    active.sort_by(|a, b| st.order.cmp(&a.lm, &b.lm));
    let lms: Vec<(Monomial, u32)> = active.iter().map(|e| (e.lm, e.mask)).collect();
    let mut out: Vec<Polynomial> = Vec::with_capacity(active.len());
    for (k, e) in active.iter().enumerate() {
        let mut terms = e.poly.terms().to_vec();
        let head = terms.remove(0);
        let tail = reduce_terms(terms, st.order, true, |m| {
            let mm = m.support_mask();
            lms.iter()
                .enumerate()
                .find(|(i, (l, mask))| *i != k && mask & !mm == 0 && l.divides(m))
                .map(|(i, _)| &active[i].poly)
        });
        let mut all = Vec::with_capacity(tail.len() + 1);
        all.push(head);
        all.extend(tail);
        out.push(Polynomial::from_sorted_terms(st.ring, all));
    }
    out
}

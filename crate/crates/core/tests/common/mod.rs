//! Brute-force linear algebra on graded pieces of homogeneous ideals.
//! Nothing here touches Gröbner bases.
#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;
use rootideals::polyring::{Monomial, MonomialOrder, Polynomial, Ring};
use rootideals::Rational;

/// Coordinates of homogeneous degree-`d` polynomials in the monomial basis.
pub struct Piece {
    index: HashMap<Monomial, usize>,
    len: usize,
}

impl Piece {
    pub fn new(ring: Ring, d: u32) -> Self {
        let monos = ring.monomials_of_degree(d);
        let len = monos.len();
        Self {
            index: monos.into_iter().enumerate().map(|(i, m)| (m, i)).collect(),
            len,
        }
    }

    pub fn coords(&self, f: &Polynomial) -> Vec<Rational> {
        let mut v = vec![Rational::from_int(0); self.len];
        for t in f.terms() {
            v[self.index[&t.mono]] = t.coeff.clone();
        }
        v
    }
}

/// Rank by plain Gaussian elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = &row[c] / &pivot_row[c];
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        r += 1;
    }
    r
}

/// Spanning set of `I_d` for `I` generated by homogeneous `gens`.
pub fn span(gens: &[Polynomial], ring: Ring, d: u32) -> Vec<Vec<Rational>> {
    let piece = Piece::new(ring, d);
    let one = Rational::from_int(1);
    let mut rows = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let e = g.degree().unwrap();
        if e > d {
            continue;
        }
        for m in ring.monomials_of_degree(d - e) {
            rows.push(piece.coords(&g.mul_term(&m, &one)));
        }
    }
    rows
}

pub fn dim(gens: &[Polynomial], ring: Ring, d: u32) -> usize {
    rank(&span(gens, ring, d))
}

pub fn member(gens: &[Polynomial], f: &Polynomial) -> bool {
    let Some(d) = f.degree() else { return true };
    let ring = f.ring();
    let mut rows = span(gens, ring, d);
    let before = rank(&rows);
    rows.push(Piece::new(ring, d).coords(f));
    rank(&rows) == before
}

/// `dim (I ∩ J)_d = dim I_d + dim J_d − dim (I + J)_d`.
pub fn intersection_dim(a: &[Polynomial], b: &[Polynomial], ring: Ring, d: u32) -> usize {
    let both: Vec<Polynomial> = a.iter().chain(b).cloned().collect();
    dim(a, ring, d) + dim(b, ring, d) - dim(&both, ring, d)
}

/// Ring with 2, 3 or 4 variables.
pub fn random_ring(rng: &mut impl Rng) -> Ring {
    match rng.gen_range(0..3) {
        0 => Ring::new(1, MonomialOrder::Grevlex),
        1 => Ring::with_extra(1, 1, MonomialOrder::Grevlex),
        _ => Ring::new(2, MonomialOrder::Grevlex),
    }
}

pub fn random_homogeneous(rng: &mut impl Rng, ring: Ring, d: u32, max_terms: usize) -> Polynomial {
    let monos = ring.monomials_of_degree(d);
    let terms = (0..rng.gen_range(1..=max_terms)).map(|_| {
        let m = monos[rng.gen_range(0..monos.len())];
        let c = loop {
            let c = rng.gen_range(-3i64..=3);
            if c != 0 {
                break c;
            }
        };
        (m, Rational::from_int(c))
    });
    Polynomial::from_terms(ring, terms)
}

pub fn random_generators(rng: &mut impl Rng, ring: Ring, count: usize, max_degree: u32) -> Vec<Polynomial> {
    (0..count)
        .map(|_| loop {
            let d = rng.gen_range(1..=max_degree);
            let g = random_homogeneous(rng, ring, d, 3);
            if !g.is_zero() {
                break g;
            }
        })
        .collect()
}

/// A random element of the ideal: a combination of monomial multiples.
pub fn random_member(rng: &mut impl Rng, gens: &[Polynomial], d: u32) -> Polynomial {
    let ring = gens[0].ring();
    let mut f = Polynomial::zero(ring);
    for g in gens {
        let e = g.degree().unwrap();
        if e <= d {
            let h = random_homogeneous(rng, ring, d - e, 2);
            f = &f + &h.checked_mul(g).unwrap();
        }
    }
    f
}

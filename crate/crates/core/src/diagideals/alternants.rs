use std::collections::{BTreeMap, HashMap, HashSet};

use super::antisymmetrize;
use crate::linalg::{Echelon, SparseVec};
use crate::polyring::{Monomial, Polynomial, Ring};
use crate::rational::Rational;
use crate::weyl::WeylGroup;

/// Bases of the diagonally alternating polynomials, by bidegree.
#[derive(Clone, Debug, Default)]
pub struct AlternantBasis {
    by_bidegree: BTreeMap<(u32, u32), Vec<Polynomial>>,
}

impl AlternantBasis {
    pub fn get(&self, a: u32, b: u32) -> &[Polynomial] {
        self.by_bidegree.get(&(a, b)).map_or(&[], Vec::as_slice)
    }

    pub fn bidegrees(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.by_bidegree.keys().copied()
    }

    /// All basis elements of total degree `≤ d`, ordered by degree, then
    /// by decreasing x-degree.
    pub fn up_to_degree(&self, d: u32) -> Vec<Polynomial> {
        let mut keys: Vec<(u32, u32)> = self.by_bidegree.keys().copied().filter(|(a, b)| a + b <= d).collect();
        keys.sort_by_key(|&(a, b)| (a + b, std::cmp::Reverse(a)));
        keys.iter().flat_map(|k| self.by_bidegree[k].iter().cloned()).collect()
    }

    /// Dimension of the alternants in total degree `d`.
    pub fn dim_in_degree(&self, d: u32) -> usize {
        self.by_bidegree
            .iter()
            .filter(|((a, b), _)| a + b == d)
            .map(|(_, v)| v.len())
            .sum()
    }
}

/// Computes alternant bases, using the character formula to stop each
/// bidegree as soon as the full dimension is reached.
pub struct AlternantBuilder<'a> {
    group: &'a WeylGroup,
    ring: Ring,
    monomial_group: bool,
    dims: Vec<Vec<usize>>,
}

impl<'a> AlternantBuilder<'a> {
    pub fn new(group: &'a WeylGroup, ring: Ring, up_to: u32) -> Self {
        let monomial_group = group.elements().iter().all(|m| {
            (0..m.rows()).all(|i| (0..m.cols()).filter(|&j| !m[(i, j)].is_zero()).count() == 1)
        });
        Self {
            group,
            ring,
            monomial_group,
            dims: group.isotypic_dims(up_to, true),
        }
    }

    /// Dimension of the alternants in bidegree `(a, b)`, from the character
    /// formula.
    pub fn expected_dim(&self, a: u32, b: u32) -> usize {
        self.dims[a as usize][b as usize]
    }

    pub fn bidegree(&self, a: u32, b: u32) -> Vec<Polynomial> {
        let target = self.expected_dim(a, b);
        if target == 0 {
            return Vec::new();
        }
        let monos = self.ring.monomials_of_bidegree(a, b);
        let order = self.ring.order();
        let mut sorted = monos.clone();
        sorted.sort_by(|x, y| order.cmp(y, x));
        let column: HashMap<Monomial, usize> = sorted.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut ech = Echelon::new();
        let mut seen: HashSet<Monomial> = HashSet::new();
        for m in &sorted {
            if ech.rank() == target {
                break;
            }
            if self.monomial_group && seen.contains(m) {
                continue;
            }
            let f = antisymmetrize(&Polynomial::monomial(self.ring, *m, Rational::ONE), self.group)
                .expect("ring matches the group");
            if self.monomial_group {
                // the orbit of m is spanned by the same antisymmetrization
                for k in 0..self.group.order() {
                    let img = self.group.act(k, &Polynomial::monomial(self.ring, *m, Rational::ONE)).expect("ring");
                    seen.insert(img.leading_monomial().expect("nonzero"));
                }
            }
            if f.is_zero() {
                continue;
            }
            let mut v: SparseVec = f.terms().iter().map(|t| (column[&t.mono], t.coeff.clone())).collect();
            v.sort_by_key(|e| e.0);
            ech.insert(v);
        }
        assert_eq!(ech.rank(), target, "alternant dimension disagrees with the character formula");
        ech.rows()
            .map(|row| {
                Polynomial::from_terms(self.ring, row.iter().map(|(i, c)| (sorted[*i], c.clone()))).primitive()
            })
            .collect()
    }

    pub fn up_to(&self, d: u32) -> AlternantBasis {
        let mut out = AlternantBasis::default();
        for total in 0..=d {
            for a in (0..=total).rev() {
                let basis = self.bidegree(a, total - a);
                if !basis.is_empty() {
                    out.by_bidegree.insert((a, total - a), basis);
                }
            }
        }
        out
    }
}

/// Basis of the alternants of bidegree `(a, b)`.
pub fn alternant_basis(group: &WeylGroup, ring: Ring, a: u32, b: u32) -> Vec<Polynomial> {
    AlternantBuilder::new(group, ring, a + b).bidegree(a, b)
}

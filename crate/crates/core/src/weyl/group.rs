use std::collections::{HashMap, VecDeque};

use super::{RootSystem, WeylError};
use crate::linalg::RationalMatrix;
use crate::polyring::{LinearChange, PolyError, Polynomial};
use crate::rational::Rational;

/// Upper bound on the number of elements produced by a closure.
pub const MAX_GROUP_ORDER: usize = 10_000;

/// A finite matrix group with its diagonal action on `ℚ[x, y]`.
///
/// Element `w` acts on polynomials by the substitution
/// `x ↦ M_w x`, `y ↦ (M_w⁻¹)ᵀ y`; acting by `M` and then by `N` is the same
/// as acting by `M·N`.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    elements: Vec<RationalMatrix>,
    index: HashMap<RationalMatrix, usize>,
    generators: Vec<usize>,
    signs: Vec<i8>,
    inverses: Vec<usize>,
    lifts: Vec<LinearChange>,
}

/// Elementary symmetric functions of the eigenvalues, i.e. the sums of
/// principal minors: `det(I − tM) = Σ (−1)ᵏ eₖ tᵏ`.
fn elementary_symmetric(m: &RationalMatrix) -> Vec<Rational> {
    let n = m.rows();
    let mut e = vec![Rational::ZERO; n + 1];
    e[0] = Rational::ONE;
    for subset in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| subset & (1 << i) != 0).collect();
        let minor = RationalMatrix::from_rows(
            idx.iter().map(|&i| idx.iter().map(|&j| m[(i, j)].clone()).collect()).collect(),
        );
        let k = idx.len();
        e[k] = &e[k] + &minor.determinant();
    }
    e
}

/// Traces of `M` on the symmetric powers `Sᵃ`, for `a ≤ up_to`.
fn symmetric_power_traces(m: &RationalMatrix, up_to: u32) -> Vec<Rational> {
    let e = elementary_symmetric(m);
    let n = m.rows();
    let mut h = vec![Rational::ONE];
    for a in 1..=up_to as usize {
        let mut acc = Rational::ZERO;
        for k in 1..=a.min(n) {
            let term = &e[k] * &h[a - k];
            acc = if k % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        h.push(acc);
    }
    h
}

impl WeylGroup {
    /// Breadth-first closure of `generators` under multiplication.
    pub fn generate(generators: &[RationalMatrix]) -> Result<Self, WeylError> {
        let n = generators.first().map_or(0, RationalMatrix::rows);
        if generators.iter().any(|g| !g.is_square() || g.rows() != n) {
            return Err(WeylError::InvalidRoots("generators must be square of equal size".into()));
        }
        let id = RationalMatrix::identity(n);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for g in generators {
                let w = &elements[k] * g;
                if !index.contains_key(&w) {
                    if elements.len() >= MAX_GROUP_ORDER {
                        return Err(WeylError::GroupTooLarge(MAX_GROUP_ORDER));
                    }
                    index.insert(w.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(w);
                }
            }
        }
        let gen_idx = generators.iter().map(|g| index[g]).collect();
        let mut signs = Vec::with_capacity(elements.len());
        let mut inverses = Vec::with_capacity(elements.len());
        let mut lifts = Vec::with_capacity(elements.len());
        for w in &elements {
            let det = w.determinant();
            signs.push(if det == Rational::ONE {
                1
            } else if det == -Rational::ONE {
                -1
            } else {
                return Err(WeylError::InvalidRoots("group element with determinant other than ±1".into()));
            });
            let inv = w.inverse().expect("group elements are invertible");
            inverses.push(*index.get(&inv).ok_or(WeylError::GroupTooLarge(MAX_GROUP_ORDER))?);
            let lift = RationalMatrix::block_diagonal(w, &inv.transpose());
            lifts.push(LinearChange::new(lift).expect("invertible"));
        }
        Ok(Self {
            elements,
            index,
            generators: gen_idx,
            signs,
            inverses,
            lifts,
        })
    }

    /// The Weyl group generated by the simple reflections of `rs`.
    pub fn of(rs: &RootSystem) -> Result<Self, WeylError> {
        Self::generate(&rs.simple_reflections())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.elements[0].rows()
    }

    pub fn elements(&self) -> &[RationalMatrix] {
        &self.elements
    }

    pub fn element(&self, w: usize) -> &RationalMatrix {
        &self.elements[w]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn index_of(&self, m: &RationalMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Determinant on the reflection representation.
    pub fn sign(&self, w: usize) -> i8 {
        self.signs[w]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverses[w]
    }

    /// Index of `M_a · M_b`.
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.index[&(&self.elements[a] * &self.elements[b])]
    }

    /// `w ⊕ (w⁻¹)ᵀ`.
    pub fn diagonal_lift(&self, w: usize) -> &RationalMatrix {
        self.lifts[w].matrix()
    }

    /// Diagonal action of element `w` on a polynomial in `x, y`.
    pub fn act(&self, w: usize, f: &Polynomial) -> Result<Polynomial, PolyError> {
        let ring = f.ring();
        if ring.rank() != self.dim() || ring.extra() != 0 {
            return Err(PolyError::RingMismatch);
        }
        self.lifts[w].apply(f)
    }

    /// Dimensions of the `χ`-isotypic part of `ℚ[x,y]_{(a,b)}` for all
    /// `a + b ≤ up_to`, where `χ` is the sign (`sign = true`) or trivial
    /// character. Indexed as `table[a][b]`.
    pub fn isotypic_dims(&self, up_to: u32, sign: bool) -> Vec<Vec<usize>> {
        let d = up_to as usize;
        let mut acc = vec![vec![Rational::ZERO; d + 1]; d + 1];
        for (k, w) in self.elements.iter().enumerate() {
            let hx = symmetric_power_traces(w, up_to);
            let hy = symmetric_power_traces(&self.elements[self.inverses[k]], up_to);
            let s = if sign && self.signs[k] < 0 { -Rational::ONE } else { Rational::ONE };
            for a in 0..=d {
                for b in 0..=d - a {
                    acc[a][b] = acc[a][b].add_mul(&s, &(&hx[a] * &hy[b]));
                }
            }
        }
        let order = Rational::from_int(self.order() as i64);
        acc.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| {
                        let q = &v / &order;
                        assert!(q.is_integer() && !q.is_negative(), "character inner product {q}");
                        q.numer().try_into().expect("small dimension")
                    })
                    .collect()
            })
            .collect()
    }

    /// Human-readable element listing for debugging.
    pub fn describe(&self) -> Vec<String> {
        self.elements
            .iter()
            .enumerate()
            .map(|(k, m)| format!("{k}: sign {:+} {:?}", self.signs[k], m))
            .collect()
    }
}

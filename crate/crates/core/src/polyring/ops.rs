//! Linear changes of variables, exact division by linear forms and
//! directional derivatives.

use std::collections::HashMap;

use super::{Monomial, PolyError, Polynomial, Ring, Term};
use crate::linalg::RationalMatrix;
use crate::rational::Rational;

/// A validated invertible substitution `var_i ↦ Σ_j M[i][j] var_j`.
///
/// Applying `M` then `N` equals applying `M·N`.
#[derive(Clone, Debug)]
pub struct LinearChange {
    matrix: RationalMatrix,
    /// Set when every row has exactly one nonzero entry.
    monomial: Option<Vec<(usize, Rational)>>,
}

impl LinearChange {
    pub fn new(matrix: RationalMatrix) -> Result<Self, PolyError> {
        if !matrix.is_square() {
            return Err(PolyError::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        if matrix.determinant().is_zero() {
            return Err(PolyError::SingularMatrix);
        }
        let monomial = (0..matrix.rows())
            .map(|i| {
                let nz: Vec<usize> = (0..matrix.cols()).filter(|&j| !matrix[(i, j)].is_zero()).collect();
                (nz.len() == 1).then(|| (nz[0], matrix[(i, nz[0])].clone()))
            })
            .collect::<Option<Vec<_>>>();
        Ok(Self { matrix, monomial })
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial.is_some()
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        let ring = f.ring();
        if self.matrix.rows() != ring.nvars() {
            return Err(PolyError::DimensionMismatch {
                expected: ring.nvars(),
                found: self.matrix.rows(),
            });
        }
        if let Some(perm) = &self.monomial {
            return Ok(Polynomial::from_terms(
                ring,
                f.terms().iter().map(|t| {
                    let mut exps = [0u16; super::MAX_VARS];
                    let mut c = t.coeff.clone();
                    for (i, (j, s)) in perm.iter().enumerate() {
                        let e = t.mono.exponent(i);
                        if e > 0 {
                            exps[*j] += e;
                            c = &c * &s.pow(e as u32);
                        }
                    }
                    (Monomial::from_exponents(&exps[..ring.nvars()]), c)
                }),
            ));
        }
        let images: Vec<Polynomial> = (0..ring.nvars())
            .map(|i| {
                Polynomial::from_terms(
                    ring,
                    (0..ring.nvars()).map(|j| (Monomial::var(j), self.matrix[(i, j)].clone())),
                )
            })
            .collect();
        let mut powers: HashMap<(usize, u16), Polynomial> = HashMap::new();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for t in f.terms() {
            let mut prod = Polynomial::constant(ring, t.coeff.clone());
            for (i, img) in images.iter().enumerate() {
                let e = t.mono.exponent(i);
                if e == 0 {
                    continue;
                }
                let p = powers.entry((i, e)).or_insert_with(|| img.pow(e as u32));
                prod = &prod * p;
            }
            for Term { mono, coeff } in prod.into_terms() {
                let e = acc.entry(mono).or_insert(Rational::ZERO);
                *e = &*e + &coeff;
            }
        }
        Ok(Polynomial::from_terms(ring, acc))
    }
}

/// Substitutes each variable by the corresponding row of `m`.
pub fn apply_linear_change(f: &Polynomial, m: &RationalMatrix) -> Result<Polynomial, PolyError> {
    LinearChange::new(m.clone())?.apply(f)
}

/// Returns `q` with `q * l = f`, failing if `l` does not divide `f`.
pub fn exact_divide_linear(f: &Polynomial, l: &Polynomial) -> Result<Polynomial, PolyError> {
    if f.ring() != l.ring() {
        return Err(PolyError::RingMismatch);
    }
    if l.is_zero() || l.degree() != Some(1) {
        return Err(PolyError::NotLinear);
    }
    let ring = f.ring();
    let lead = l.leading_term().expect("nonzero").clone();
    let inv = lead.coeff.recip();
    let mut rest = f.clone();
    let mut quotient: Vec<Term> = Vec::new();
    while let Some(t) = rest.leading_term() {
        let Some(m) = lead.mono.quotient_of(&t.mono) else {
            return Err(PolyError::NotDivisible);
        };
        let c = &t.coeff * &inv;
        rest = rest.sub_mul_term(&c, &m, l);
        quotient.push(Term { mono: m, coeff: c });
    }
    // leading terms of `rest` strictly decrease, so the quotient is sorted
    Ok(Polynomial::from_sorted_terms(ring, quotient))
}

/// Directional derivative `Σ direction[i] ∂f/∂var_i`.
pub fn partial_derivative(f: &Polynomial, direction: &[Rational]) -> Result<Polynomial, PolyError> {
    let ring: Ring = f.ring();
    if direction.len() != ring.nvars() {
        return Err(PolyError::DimensionMismatch {
            expected: ring.nvars(),
            found: direction.len(),
        });
    }
    let mut terms = Vec::new();
    for t in f.terms() {
        for (i, d) in direction.iter().enumerate() {
            let e = t.mono.exponent(i);
            if e == 0 || d.is_zero() {
                continue;
            }
            let c = &(&t.coeff * d) * &Rational::from_int(e as i64);
            terms.push((t.mono.with_exponent(i, e - 1), c));
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::MonomialOrder;

    fn p(ring: Ring, s: &str) -> Polynomial {
        Polynomial::parse(ring, s).unwrap()
    }

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn identity_and_swap() {
        let ring = Ring::new(2, MonomialOrder::Grevlex);
        let f = p(ring, "x1^2*y2 - 3*x2 + 1");
        assert_eq!(apply_linear_change(&f, &RationalMatrix::identity(4)).unwrap(), f);
        let swap = RationalMatrix::from_i64_rows(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        let g = p(ring, "x1 - x2");
        assert_eq!(apply_linear_change(&g, &swap).unwrap(), -&g);
    }

    #[test]
    fn singular_matrix_rejected() {
        let ring = Ring::new(1, MonomialOrder::Grevlex);
        let m = RationalMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(apply_linear_change(&p(ring, "x1"), &m), Err(PolyError::SingularMatrix));
        let m3 = RationalMatrix::identity(3);
        assert!(matches!(apply_linear_change(&p(ring, "x1"), &m3), Err(PolyError::DimensionMismatch { .. })));
    }

    #[test]
    fn general_substitution() {
        let ring = Ring::new(1, MonomialOrder::Grevlex);
        // x ↦ x + y, y ↦ y
        let m = RationalMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        assert_eq!(apply_linear_change(&p(ring, "x1^2"), &m).unwrap(), p(ring, "x1^2 + 2*x1*y1 + y1^2"));
    }

    #[test]
    fn division_examples() {
        let ring = Ring::new(1, MonomialOrder::Grevlex);
        assert_eq!(exact_divide_linear(&p(ring, "x1^2 - y1^2"), &p(ring, "x1 - y1")).unwrap(), p(ring, "x1 + y1"));
        assert!(exact_divide_linear(&Polynomial::zero(ring), &p(ring, "x1 - y1")).unwrap().is_zero());
        let ring2 = Ring::new(2, MonomialOrder::Grevlex);
        let l = p(ring2, "x1 - x2");
        assert_eq!(exact_divide_linear(&l.pow(3), &l).unwrap(), l.pow(2));
        assert_eq!(exact_divide_linear(&p(ring, "x1^2 + y1"), &p(ring, "x1 - y1")), Err(PolyError::NotDivisible));
        assert_eq!(exact_divide_linear(&p(ring, "x1"), &p(ring, "x1^2")), Err(PolyError::NotLinear));
    }

    #[test]
    fn derivative_examples() {
        let ring = Ring::new(1, MonomialOrder::Grevlex);
        assert_eq!(partial_derivative(&p(ring, "x1^2"), &[r(1), r(0)]).unwrap(), p(ring, "2*x1"));
        assert!(partial_derivative(&p(ring, "x1"), &[r(0), r(1)]).unwrap().is_zero());
        let ring2 = Ring::new(2, MonomialOrder::Grevlex);
        assert_eq!(
            partial_derivative(&p(ring2, "x1*x2"), &[r(1), r(1), r(0), r(0)]).unwrap(),
            p(ring2, "x1 + x2")
        );
    }
}

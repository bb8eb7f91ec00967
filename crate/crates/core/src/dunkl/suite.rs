use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    commutativity_witness, defining_relation_sides, DunklContext, DunklError, DunklOperator,
};
use crate::polyring::{partial_derivative, Monomial, Polynomial, Ring};
use crate::rational::Rational;

/// Outcome of one seeded property over a batch of samples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub property: String,
    #[serde(rename = "type")]
    pub type_label: String,
    pub c: String,
    pub samples: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Random polynomial in the first `rank` variables of `ring` with small
/// integer coefficients.
pub fn random_x_polynomial(rng: &mut impl Rng, ring: Ring, rank: usize, max_degree: u32, max_terms: usize) -> Polynomial {
    let nterms = rng.gen_range(1..=max_terms);
    let terms = (0..nterms).map(|_| {
        let d = rng.gen_range(0..=max_degree);
        let mut exps = vec![0u16; rank];
        for _ in 0..d {
            exps[rng.gen_range(0..rank)] += 1;
        }
        let c = loop {
            let c = rng.gen_range(-5i64..=5);
            if c != 0 {
                break c;
            }
        };
        (Monomial::from_exponents(&exps), Rational::from_int(c))
    });
    Polynomial::from_terms(ring, terms)
}

fn random_vector(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-2i64..=2)).collect();
        if v.iter().any(|&c| c != 0) {
            return v.into_iter().map(Rational::from_int).collect();
        }
    }
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|j| if i == j { Rational::ONE } else { Rational::ZERO }).collect()
}

/// Runs the seeded Dunkl property suite for one parameter value.
pub fn run_suite(
    context: &Arc<DunklContext>,
    c: &Rational,
    seed: u64,
    samples: usize,
) -> Result<Vec<PropertyResult>, DunklError> {
    let ring = context.ring();
    let n = context.rank();
    let label = context.root_system().label().to_string();
    let result = |property: &str, witness: Option<Polynomial>| PropertyResult {
        property: property.to_string(),
        type_label: label.clone(),
        c: c.to_string(),
        samples,
        passed: witness.is_none(),
        witness: witness.map(|w| w.to_string()),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    let polys: Vec<Polynomial> = (0..samples).map(|_| random_x_polynomial(&mut rng, ring, n, 4, 4)).collect();
    let mut witness = None;
    'comm: for i in 0..n {
        for j in i + 1..n {
            if let Some(w) = commutativity_witness(context, c, &polys, &unit(n, i), &unit(n, j))? {
                witness = Some(w);
                break 'comm;
            }
        }
    }
    out.push(result("commutativity", witness));

    let mut witness = None;
    for _ in 0..samples {
        let f = random_x_polynomial(&mut rng, ring, n, 3, 3);
        let xi = Polynomial::linear_form(ring, 0, &random_vector(&mut rng, n));
        let y = random_vector(&mut rng, n);
        let (lhs, rhs) = defining_relation_sides(context, c, &xi, &y, &f)?;
        if lhs != rhs {
            witness = Some(f);
            break;
        }
    }
    out.push(result("defining-relation", witness));

    let mut witness = None;
    for f in &polys {
        let y = random_vector(&mut rng, n);
        let d = DunklOperator::new(context, Rational::ZERO, y.clone())?;
        let mut full = y;
        full.resize(ring.nvars(), Rational::ZERO);
        if d.apply(f)? != partial_derivative(f, &full)? {
            witness = Some(f.clone());
            break;
        }
    }
    out.push(result("c-zero-derivative", witness));

    let mut witness = None;
    'deg: for f in &polys {
        let d = DunklOperator::new(context, c.clone(), random_vector(&mut rng, n))?;
        for k in 0..=f.degree().unwrap_or(0) {
            let part = f.homogeneous_part(k);
            let img = d.apply(&part)?;
            if !img.is_zero() && (k == 0 || !img.is_homogeneous() || img.degree() != Some(k - 1)) {
                witness = Some(part);
                break 'deg;
            }
        }
    }
    out.push(result("degree-lowering", witness));

    let mut witness = None;
    let group = context.group();
    'eq: for f in &polys {
        for &w in group.generators() {
            let y = random_vector(&mut rng, n);
            let lhs = group.act(w, &DunklOperator::new(context, c.clone(), y.clone())?.apply(f)?)?;
            let moved = DunklOperator::new(context, c.clone(), context.act_on_direction(w, &y))?;
            if lhs != moved.apply(&group.act(w, f)?)? {
                witness = Some(f.clone());
                break 'eq;
            }
        }
    }
    out.push(result("equivariance", witness));
    Ok(out)
}

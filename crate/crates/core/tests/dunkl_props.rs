use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rootideals::dunkl::{
    check_commutativity, check_defining_relation, random_x_polynomial, rank_one_system, DunklContext,
    DunklOperator, RankOneOperator,
};
use rootideals::polyring::{exact_divide_linear, partial_derivative, Monomial, Polynomial};
use rootideals::weyl::RootSystem;
use rootideals::Rational;

const TYPES: [&str; 3] = ["A2", "B2", "G2"];

fn parameter() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=7).prop_map(|(n, d)| Rational::new(n, d))
}

fn direction(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    loop {
        let v: Vec<Rational> = (0..n).map(|_| Rational::from_int(rng.gen_range(-3..=3))).collect();
        if v.iter().any(|c| !c.is_zero()) {
            return v;
        }
    }
}

fn context(label: &str) -> std::sync::Arc<DunklContext> {
    DunklContext::new(&RootSystem::build(label).unwrap()).unwrap()
}

/// `f` with `x_i` and `x_j` exchanged.
fn swap(f: &Polynomial, i: usize, j: usize) -> Polynomial {
    let terms = f.terms().iter().map(|t| {
        let mut e: Vec<u16> = t.mono.exponents().to_vec();
        e.swap(i, j);
        (Monomial::from_exponents(&e), t.coeff.clone())
    });
    Polynomial::from_terms(f.ring(), terms)
}

/// `∂_i f − c Σ_{j≠i} (f − s_ij f)/(x_i − x_j)` on `ℚ[x₁, x₂, x₃]`.
fn type_a_dunkl(f: &Polynomial, c: &Rational, i: usize) -> Polynomial {
    let ring = f.ring();
    let mut e = vec![Rational::from_int(0); ring.nvars()];
    e[i] = Rational::from_int(1);
    let mut out = partial_derivative(f, &e).unwrap();
    for j in (0..3).filter(|&j| j != i) {
        let diff = Polynomial::var(ring, i) - Polynomial::var(ring, j);
        let q = exact_divide_linear(&(f - &swap(f, i, j)), &diff).unwrap();
        out = &out - &q.scale(c);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn type_a_matches_classical_formula(c in parameter(), seed in any::<u64>(), i in 0usize..3) {
        let ctx = context("A2");
        prop_assert_eq!(ctx.rank(), 3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_x_polynomial(&mut rng, ctx.ring(), 3, 4, 5);
        let mut y = vec![Rational::from_int(0); 3];
        y[i] = Rational::from_int(1);
        let d = DunklOperator::new(&ctx, c.clone(), y).unwrap();
        prop_assert_eq!(d.apply(&f).unwrap(), type_a_dunkl(&f, &c, i));
    }

    #[test]
    fn commute_and_satisfy_relation(t in 0usize..3, c in parameter(), seed in any::<u64>()) {
        let ctx = context(TYPES[t]);
        let n = ctx.rank();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let samples: Vec<Polynomial> = (0..4).map(|_| random_x_polynomial(&mut rng, ctx.ring(), n, 3, 4)).collect();
        let (y1, y2) = (direction(&mut rng, n), direction(&mut rng, n));
        prop_assert!(check_commutativity(&ctx, &c, &samples, &y1, &y2).unwrap());
        let xi = Polynomial::linear_form(ctx.ring(), 0, &direction(&mut rng, n));
        prop_assert!(check_defining_relation(&ctx, &c, &xi, &y1, &samples).unwrap());
    }

    #[test]
    fn equivariant_under_every_element(t in 0usize..3, c in parameter(), seed in any::<u64>()) {
        let ctx = context(TYPES[t]);
        let n = ctx.rank();
        let g = ctx.group();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_x_polynomial(&mut rng, ctx.ring(), n, 3, 4);
        let y = direction(&mut rng, n);
        let d = DunklOperator::new(&ctx, c.clone(), y.clone()).unwrap();
        let df = d.apply(&f).unwrap();
        for w in 0..g.order() {
            let moved = DunklOperator::new(&ctx, c.clone(), ctx.act_on_direction(w, &y)).unwrap();
            prop_assert_eq!(g.act(w, &df).unwrap(), moved.apply(&g.act(w, &f).unwrap()).unwrap());
        }
    }

    #[test]
    fn linear_and_degree_lowering(t in 0usize..3, c in parameter(), seed in any::<u64>(), k in 1u32..5) {
        let ctx = context(TYPES[t]);
        let n = ctx.rank();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_x_polynomial(&mut rng, ctx.ring(), n, 4, 4).homogeneous_part(k);
        let g = random_x_polynomial(&mut rng, ctx.ring(), n, 4, 4);
        let (y1, y2) = (direction(&mut rng, n), direction(&mut rng, n));
        let d1 = DunklOperator::new(&ctx, c.clone(), y1.clone()).unwrap();
        let d2 = DunklOperator::new(&ctx, c.clone(), y2.clone()).unwrap();
        let df = d1.apply(&f).unwrap();
        prop_assert!(df.is_zero() || (df.is_homogeneous() && df.degree() == Some(k - 1)));
        prop_assert_eq!(d1.apply(&(&f + &g)).unwrap(), &df + &d1.apply(&g).unwrap());
        let sum: Vec<Rational> = y1.iter().zip(&y2).map(|(a, b)| a + b).collect();
        if sum.iter().any(|s| !s.is_zero()) {
            let d12 = DunklOperator::new(&ctx, c.clone(), sum).unwrap();
            prop_assert_eq!(d12.apply(&f).unwrap(), &df + &d2.apply(&f).unwrap());
        }
        prop_assert!(d1.apply(&Polynomial::one(ctx.ring())).unwrap().is_zero());
    }

    /// `D xᵏ = (k − c(1 − (−1)ᵏ)) xᵏ⁻¹` in rank one.
    #[test]
    fn rank_one_on_powers(c in parameter(), k in 0u32..9) {
        let ctx = DunklContext::new(&rank_one_system()).unwrap();
        let ring = ctx.ring();
        let d = DunklOperator::new(&ctx, c.clone(), vec![Rational::from_int(1)]).unwrap();
        let x = Polynomial::var(ring, 0);
        let odd = if k % 2 == 1 { Rational::from_int(2) } else { Rational::from_int(0) };
        let coeff = &Rational::from_int(k as i64) - &(&c * &odd);
        let want = if k == 0 { Polynomial::zero(ring) } else { x.pow(k - 1).scale(&coeff) };
        prop_assert_eq!(d.apply(&x.pow(k)).unwrap(), want);
        let word = RankOneOperator::dunkl(&c).apply_to_power(k as i32);
        let got = word.get(&(k as i32 - 1)).cloned().unwrap_or_else(|| Rational::from_int(0));
        prop_assert_eq!(got, coeff);
    }
}

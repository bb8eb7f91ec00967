mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rootideals::diagideals::{
    alternant_basis, antisymmetrize, delta, graded_comparison, ideal_i, ideal_j, pair_ideals, reynolds,
    symbolic_power,
};
use rootideals::polyring::Polynomial;
use rootideals::weyl::{RootSystem, WeylGroup};

const SMALL: [&str; 4] = ["A1", "A2", "B2", "G2"];

fn setup(label: &str) -> (RootSystem, WeylGroup) {
    let rs = RootSystem::build(label).unwrap();
    let w = WeylGroup::of(&rs).unwrap();
    (rs, w)
}

fn label() -> impl Strategy<Value = &'static str> {
    (0..SMALL.len()).prop_map(|i| SMALL[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn idempotents(label in label(), seed in any::<u64>(), d in 0u32..4) {
        let (rs, w) = setup(label);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = common::random_homogeneous(&mut rng, rs.ring(), d, 4);
        let e = reynolds(&f, &w).unwrap();
        let a = antisymmetrize(&f, &w).unwrap();
        prop_assert_eq!(reynolds(&e, &w).unwrap(), e.clone());
        prop_assert_eq!(antisymmetrize(&a, &w).unwrap(), a.clone());
        prop_assert!(reynolds(&a, &w).unwrap().is_zero());
        prop_assert!(antisymmetrize(&e, &w).unwrap().is_zero());
        for k in 0..w.order() {
            prop_assert_eq!(w.act(k, &e).unwrap(), e.clone());
            let signed = if w.sign(k) < 0 { -&a } else { a.clone() };
            prop_assert_eq!(w.act(k, &a).unwrap(), signed);
        }
    }
}

/// `dim A_(a,b)` as the rank of the antisymmetrized monomials.
#[test]
fn alternant_dims_match_antisymmetrized_monomials() {
    for label in ["A1", "A2", "B2", "G2"] {
        let (rs, w) = setup(label);
        let ring = rs.ring();
        for a in 0..=3 {
            for b in 0..=3 - a {
                let images: Vec<Polynomial> = ring
                    .monomials_of_bidegree(a, b)
                    .into_iter()
                    .map(|m| antisymmetrize(&Polynomial::monomial(ring, m, 1.into()), &w).unwrap())
                    .filter(|p| !p.is_zero())
                    .collect();
                let piece = common::Piece::new(ring, a + b);
                let rows: Vec<_> = images.iter().map(|p| piece.coords(p)).collect();
                let basis = alternant_basis(&w, ring, a, b);
                assert_eq!(basis.len(), common::rank(&rows), "{label} ({a},{b})");
                for f in &basis {
                    assert_eq!(&antisymmetrize(f, &w).unwrap(), f, "{label}");
                }
            }
        }
    }
}

#[test]
fn j_inside_i() {
    for label in ["A1", "A2", "B2", "G2"] {
        let (rs, w) = setup(label);
        let j = ideal_j(&rs, &w, 8).unwrap();
        let i = ideal_i(&rs).unwrap();
        assert!(i.contains_ideal(&j.ideal).unwrap(), "{label}");
        for p in pair_ideals(&rs) {
            assert!(p.contains_ideal(&i).unwrap(), "{label}");
        }
    }
}

#[test]
fn ordinary_powers_inside_symbolic() {
    for label in ["A1", "A2", "B2"] {
        let (rs, _) = setup(label);
        let i = ideal_i(&rs).unwrap();
        for d in 1..=3 {
            let ordinary = i.power(d).unwrap();
            let symbolic = symbolic_power(&rs, d).unwrap();
            assert!(symbolic.contains_ideal(&ordinary).unwrap(), "{label} d={d}");
        }
        assert!(symbolic_power(&rs, 1).unwrap().equals(&i).unwrap(), "{label}");
    }
}

/// Raising the generator bound leaves lower degrees unchanged.
#[test]
fn alternant_ideal_dims_are_stable() {
    for (label, lo, hi) in [("A2", 6, 8), ("B2", 6, 9), ("G2", 6, 8)] {
        let (rs, w) = setup(label);
        let small = ideal_j(&rs, &w, lo).unwrap();
        let large = ideal_j(&rs, &w, hi).unwrap();
        for (d, a, b) in graded_comparison(&small.ideal, &large.ideal, lo).unwrap() {
            assert_eq!(a, b, "{label} degree {d}");
        }
    }
}

#[test]
fn lowest_x_alternant_is_delta() {
    for label in ["A2", "B2", "G2"] {
        let (rs, w) = setup(label);
        let d = delta(&rs);
        let deg = d.degree().unwrap();
        let ring = rs.ring();
        let basis = alternant_basis(&w, ring, deg, 0);
        assert_eq!(basis.len(), 1, "{label}");
        assert_eq!(basis[0].primitive(), d.primitive(), "{label}");
        assert!(alternant_basis(&w, ring, deg - 1, 0).is_empty(), "{label}");
    }
}

mod common;

use common::F;
use kaci::aci::{
    beta23, bound_suite, check_lift, classify, egh_witness, extract_regular_subsequence, generate_family_one,
    generate_family_two, is_quadratic_aci, lg_lift, predicted_betti, random_quadratic_aci, AciShape, Case,
    RemarkAdjustment, DEFAULT_RETRY_BUDGET,
};
use kaci::groebner::{hilbert_numerator, ideal_eq, is_regular_sequence};
use kaci::hilbert::multiplicity;
use kaci::resolution::betti_numbers;
use kaci::{Field, Ideal, Polynomial};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn family(case: Case, g: usize, seed: u64) -> Ideal<F> {
    match case {
        Case::One => generate_family_one::<F>(g, g + 2, seed, DEFAULT_RETRY_BUDGET).unwrap(),
        Case::Two => generate_family_two::<F>(g, g + 2, seed, DEFAULT_RETRY_BUDGET).unwrap(),
    }
}

/// The same ideal presented by random invertible combinations of its generators.
fn scramble(i: &Ideal<F>, seed: u64) -> Ideal<F> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = i.order();
    loop {
        let gens: Vec<Polynomial<F>> = (0..i.gens().len())
            .map(|_| i.gens().iter().fold(Polynomial::zero(order), |acc, q| acc.add_poly(&q.scale(&F::random(&mut rng)))))
            .collect();
        let j = Ideal::new(i.ring().clone(), gens).unwrap();
        if ideal_eq(&i, &j) {
            return j;
        }
    }
}

fn arb_member() -> impl Strategy<Value = (Case, usize, u64)> {
    prop_oneof![
        (1usize..=4, 0u64..1000).prop_map(|(g, s)| (Case::One, g, s)),
        (2usize..=4, 0u64..1000).prop_map(|(g, s)| (Case::Two, g, s)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn classification_reassembles_the_input((case, g, seed) in arb_member()) {
        let i = scramble(&family(case, g, seed), seed);
        let c = classify(&i).unwrap();
        prop_assert_eq!(c.g, g);
        prop_assert_eq!(c.beta23, if case == Case::One { 1 } else { 2 });
        prop_assert!(c.is_koszul(), "{}", c.to_json());
        prop_assert!(ideal_eq(&c.reassemble().unwrap(), &i));
    }

    #[test]
    fn one_syzygy_tail_is_regular(g in 1usize..=4, seed in 0u64..1000) {
        let i = family(Case::One, g, seed);
        let c = classify(&i).unwrap();
        let AciShape::OneLinearSyzygy { z, w, quadrics, remark, .. } = &c.shape else { panic!("{}", c.tag()) };
        prop_assert_ne!(*remark, RemarkAdjustment::Failed);
        let mut seq = vec![z.mul_poly(w)];
        seq.extend(quadrics.iter().cloned());
        prop_assert!(is_regular_sequence(&seq, None, i.ring()));
    }

    #[test]
    fn random_aci_has_at_most_two_linear_syzygies(g in 2usize..=4, seed in 0u64..10_000) {
        let i = random_quadratic_aci::<F>(g, g + 2, seed, DEFAULT_RETRY_BUDGET).unwrap();
        prop_assert!(is_quadratic_aci(&i));
        let b = beta23(i.gens(), i.nvars()).unwrap();
        prop_assert!(b <= 2);
        let c = classify(&i).unwrap();
        prop_assert_eq!(c.beta23, b);
        if c.is_koszul() {
            prop_assert!(ideal_eq(&c.reassemble().unwrap(), &i));
        }
    }

    #[test]
    fn regular_subsequence_extraction(g in 2usize..=4, seed in 0u64..1000) {
        let i = random_quadratic_aci::<F>(g, g + 2, seed, DEFAULT_RETRY_BUDGET).unwrap();
        let r = extract_regular_subsequence(&i, seed, DEFAULT_RETRY_BUDGET).unwrap();
        prop_assert_eq!(r.regular.len(), g);
        prop_assert!(is_regular_sequence(&r.regular, None, i.ring()));
        let mut all = r.regular.clone();
        all.push(r.first.clone());
        prop_assert!(ideal_eq(&Ideal::new(i.ring().clone(), all).unwrap(), &i));
    }
}

#[test]
fn random_generation_replays() {
    for seed in 0..10 {
        let a = random_quadratic_aci::<F>(3, 5, seed, DEFAULT_RETRY_BUDGET).unwrap();
        assert_eq!(a, random_quadratic_aci::<F>(3, 5, seed, DEFAULT_RETRY_BUDGET).unwrap());
    }
}

#[test]
fn tables_multiplicities_and_bounds() {
    for g in 2..=4 {
        for (case, mult) in [(Case::One, 1i64 << (g - 1)), (Case::Two, 3 << (g - 2))] {
            for seed in 0..3 {
                let i = family(case, g, seed);
                let b = betti_numbers(&i);
                assert_eq!(b, predicted_betti(g, case).unwrap());
                assert_eq!(multiplicity(&i).unwrap(), mult);
                let r = bound_suite(&i, &b, Some(&classify(&i).unwrap()));
                assert!(r.all_hold(), "{case:?} g={g} seed={seed}: {r:?}");
            }
        }
    }
}

#[test]
fn witness_hilbert_functions() {
    // (x1^2, x2^2, x2 x3) for one linear syzygy at g = 2
    let w = egh_witness(2, 4, Case::One).unwrap();
    assert_eq!(w.hilbert_numerator(), hilbert_numerator(&family(Case::One, 2, 0)));
    let w = egh_witness(3, 5, Case::Two).unwrap();
    assert_eq!(w.hilbert_numerator(), hilbert_numerator(&family(Case::Two, 3, 0)));
}

#[test]
fn lifts_of_scrambled_inputs() {
    for (case, g) in [(Case::One, 1), (Case::One, 3), (Case::Two, 2), (Case::Two, 3)] {
        let i = scramble(&family(case, g, 7), 7);
        let cert = lg_lift(&classify(&i).unwrap()).unwrap();
        let r = check_lift(&cert);
        assert!(r.passed(), "{case:?} g={g}: {}", r.to_json());
        assert_eq!(r.gb_max_degree, 2);
    }
}

#[test]
fn complete_intersections_and_non_aci() {
    let ci = common::parse("ring Fp[x,y,z]; ideal (x^2, y^2);");
    assert!(!is_quadratic_aci(&ci));
    let c = common::parse("ring Fp[x,y,z]; ideal (x*y, y*z, x*z);");
    assert!(is_quadratic_aci(&c));
    assert_eq!(classify(&c).unwrap().tag(), "TwoLinearSyzygies");
}

mod common;

use common::{arb_ideal, arb_ideal_and_form, ring, F};
use kaci::groebner::{
    buchberger, colon, initial_ideal, is_regular_on, is_regular_on_by_colon, krull_dimension, ideal_eq,
};
use kaci::monomial::BaseOrder;
use kaci::oracle::{colon_dimension_in_degree, ideal_dimension_in_degree};
use kaci::{Field, Ideal, MonomialOrder, Polynomial};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn orders(n: usize) -> Vec<MonomialOrder> {
    vec![
        MonomialOrder::Grevlex,
        MonomialOrder::Lex,
        MonomialOrder::block(&[n - 1], BaseOrder::Grevlex),
        MonomialOrder::block(&[0], BaseOrder::Lex),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn basis_is_groebner_and_contains_generators(i in arb_ideal(4, 3, 3)) {
        for order in orders(i.nvars()) {
            let gb = buchberger(&i, order);
            prop_assert!(gb.is_groebner(), "{order:?}");
            for g in i.gens() {
                prop_assert!(gb.normal_form(&g.with_order(order)).is_zero());
            }
        }
    }

    #[test]
    fn initial_ideal_ignores_generator_order(i in arb_ideal(4, 4, 3), k in 0usize..4) {
        let mut gens = i.gens().to_vec();
        gens.reverse();
        let r = gens.len();
        gens.rotate_left(k % r);
        let j = Ideal::new(i.ring().clone(), gens).unwrap();
        for order in orders(i.nvars()) {
            prop_assert_eq!(initial_ideal(&i, order), initial_ideal(&j, order));
        }
    }

    #[test]
    fn colon_matches_degreewise_kernel((i, f) in arb_ideal_and_form(4, 3, 2)) {
        let c = colon(&i, &f).unwrap();
        for d in 0..=6 {
            prop_assert_eq!(colon_dimension_in_degree(&i, &f, d), ideal_dimension_in_degree(&c, d), "degree {}", d);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dimension_of_initial_ideal(i in arb_ideal(5, 4, 3)) {
        prop_assert_eq!(krull_dimension(&i), initial_ideal(&i, MonomialOrder::Lex).dimension());
        prop_assert_eq!(krull_dimension(&i), initial_ideal(&i, MonomialOrder::Grevlex).dimension());
    }
}

fn random_form(rng: &mut ChaCha8Rng, n: usize, d: u32) -> Polynomial<F> {
    let basis = kaci::Monomial::all_of_degree(n, d);
    let c: Vec<F> = basis.iter().map(|_| F::random(rng)).collect();
    Polynomial::from_coefficients(&c, &basis, MonomialOrder::Grevlex)
}

#[test]
fn regularity_is_the_dimension_drop_on_complete_intersections() {
    // J = (a b, c) for random forms: a complete intersection of height 2.
    // Candidates: a generic form (regular) and a + (multiple of c) (a zero divisor).
    let mut seen = [0usize; 2];
    for seed in 0..24u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 4;
        let (a, b, c) = (random_form(&mut rng, n, 1), random_form(&mut rng, n, 1), random_form(&mut rng, n, 2));
        let j = Ideal::new(ring(n), vec![a.mul_poly(&b), c.clone()]).unwrap();
        assert_eq!(krull_dimension(&j), n as i64 - 2);
        let l = random_form(&mut rng, n, 1);
        let candidates = [random_form(&mut rng, n, 2), a.mul_poly(&l).add_poly(&c.scale(&F::from_i64(3)))];
        for f in candidates.iter().chain([&a]) {
            let jf = j.plus(std::slice::from_ref(f)).unwrap();
            if ideal_eq(&jf, &j) {
                continue;
            }
            let drop = krull_dimension(&jf) == krull_dimension(&j) - 1;
            assert_eq!(is_regular_on(f, &j), drop, "seed {seed}");
            assert_eq!(is_regular_on_by_colon(f, &j), drop, "seed {seed}");
            seen[drop as usize] += 1;
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

#[test]
fn worked_example_colons() {
    let i = common::parse("ring Fp[x,y,z,w]; ideal (x*y, x*w, z^2);");
    let f = kaci::parse::parse_poly::<F>("(x-y)*z", i.ring(), MonomialOrder::Grevlex).unwrap();
    let want = common::parse("ring Fp[x,y,z,w]; ideal (x*y, x*w, z);");
    assert!(ideal_eq(&colon(&i, &f).unwrap(), &want));

    let i = common::parse("ring Fp[x,y,z,w]; ideal (x*y, x*w, z^2, (x-y)*z);");
    let f = kaci::parse::parse_poly::<F>("x^2+z*w", i.ring(), MonomialOrder::Grevlex).unwrap();
    let want = common::parse("ring Fp[x,y,z,w]; ideal (x*w, y, z);");
    assert!(ideal_eq(&colon(&i, &f).unwrap(), &want));
}

mod common;

use common::{arb_ideal, F};
use kaci::aci::{generate_family_one, generate_family_two, DEFAULT_RETRY_BUDGET};
use kaci::complex::{koszul_complex, taylor_complex};
use kaci::groebner::{hilbert_numerator, initial_ideal};
use kaci::oracle::tor_by_koszul_homology;
use kaci::resolution::{betti_numbers, minimal_free_resolution, schreyer_resolution};
use kaci::{BettiTable, MonomialOrder};
use proptest::prelude::*;

fn truncate(b: &BettiTable, d: u32) -> BettiTable {
    BettiTable::from_entries(b.entries().iter().filter(|((_, j), _)| *j <= d).map(|(&k, &v)| (k, v)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn resolutions_are_complexes_and_minimize_keeps_euler(i in arb_ideal(4, 3, 3)) {
        let s = schreyer_resolution(&i);
        prop_assert!(s.is_complex() && s.is_graded());
        let m = s.minimize();
        prop_assert!(m.is_complex() && m.is_minimal());
        prop_assert_eq!(s.euler_numerator(), m.euler_numerator());
        prop_assert_eq!(m.euler_numerator(), hilbert_numerator(&i));
    }

    #[test]
    fn section_betti_numbers_match_minimal_resolution(i in arb_ideal(4, 4, 3)) {
        prop_assert_eq!(betti_numbers(&i), minimal_free_resolution(&i).betti_table().unwrap());
    }

    #[test]
    fn minimal_resolution_matches_koszul_homology(i in arb_ideal(4, 3, 3)) {
        let b = minimal_free_resolution(&i).betti_table().unwrap();
        prop_assert_eq!(truncate(&b, 7), tor_by_koszul_homology(&i, 7));
    }

    #[test]
    fn taylor_and_koszul_complexes(i in arb_ideal(4, 3, 2)) {
        let m = initial_ideal(&i, MonomialOrder::Grevlex);
        let t = taylor_complex::<F>(&m, i.ring().clone(), MonomialOrder::Grevlex);
        prop_assert!(t.is_complex());
        prop_assert_eq!(t.minimize().euler_numerator(), m.hilbert_numerator());
        let k = koszul_complex(i.ring().clone(), MonomialOrder::Grevlex, i.gens());
        prop_assert!(k.is_complex());
    }
}

#[test]
fn generated_families_are_subdiagonal_with_linear_syzygies() {
    for g in 2..=4 {
        for seed in 0..5 {
            let one = generate_family_one::<F>(g, g + 2, seed, DEFAULT_RETRY_BUDGET).unwrap();
            let two = generate_family_two::<F>(g, g + 2, seed, DEFAULT_RETRY_BUDGET).unwrap();
            for (i, b23) in [(one, 1), (two, 2)] {
                let b = betti_numbers(&i);
                assert!(b.is_subdiagonal());
                assert_eq!(b.get(2, 3), b23);
                let mu = i.gens().len();
                for k in 2..=mu {
                    let c = binomial(mu, k);
                    assert!(b.get(k, k as u32 + 1) <= c && b.get(k, 2 * k as u32) <= c);
                }
            }
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

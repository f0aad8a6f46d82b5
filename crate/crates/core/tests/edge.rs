mod common;

use common::F;
use kaci::aci::{predicted_betti, Case};
use kaci::edge::{build_catalog, edge_ideal, enumerate_graphs, monomial_ideal_to_ideal, polarize, Graph};
use kaci::groebner::height;
use kaci::monomial_ideal::MonomialIdeal;
use kaci::oracle::{burnside_graph_count, labeled_graph_classes};
use kaci::resolution::betti_numbers;
use kaci::Monomial;
use proptest::prelude::*;

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Quadratic monomial ideals in up to 5 variables, squares allowed.
fn arb_quadratic_monomial_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=5).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 1..=5).prop_map(move |pairs| {
            MonomialIdeal::new(n, pairs.into_iter().map(|(a, b)| Monomial::var(a).mul(&Monomial::var(b))))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn polarization_keeps_betti_table_and_h_polynomial(m in arb_quadratic_monomial_ideal()) {
        let p = polarize(&m).unwrap();
        prop_assert!(p.ideal.is_squarefree());
        prop_assert_eq!(p.depolarize(), m.clone());
        let a = betti_numbers(&monomial_ideal_to_ideal::<F>(&m).unwrap());
        let b = betti_numbers(&monomial_ideal_to_ideal::<F>(&p.ideal).unwrap());
        prop_assert_eq!(&a, &b);
        let (_, ha) = m.hilbert_numerator().split_one_minus_t();
        let (_, hb) = p.ideal.hilbert_numerator().split_one_minus_t();
        prop_assert_eq!(ha, hb);
    }
}

#[test]
fn enumeration_is_complete() {
    for g in 1..=6 {
        assert_eq!(enumerate_graphs(g).unwrap().len() as u128, burnside_graph_count(2 * g, g), "g = {g}");
    }
    for g in 1..=3 {
        assert_eq!(enumerate_graphs(g).unwrap().len(), labeled_graph_classes(g));
    }
}

#[test]
fn catalog_tables_are_bounded() {
    for g in 1..=5 {
        let cat = build_catalog::<F>(g).unwrap();
        for e in &cat.entries {
            let totals = e.betti.totals();
            assert!(totals.iter().enumerate().all(|(i, &b)| b <= binomial(g, i)), "{:?}", e.graph);
            assert!(e.betti.is_subdiagonal());
        }
    }
}

#[test]
fn aci_edge_ideals_match_the_two_shapes() {
    for g in 3..=5 {
        let cat = build_catalog::<F>(g).unwrap();
        assert_eq!(cat.aci_tables().len(), 2);
        for e in cat.entries.iter().filter(|e| e.aci) {
            let ideal = edge_ideal::<F>(&e.graph);
            let h = height(&ideal) as usize;
            assert_eq!(h + 1, g);
            let case = if e.betti.get(2, 3) == 1 { Case::One } else { Case::Two };
            assert_eq!(e.betti, predicted_betti(h, case).unwrap(), "{:?}", e.graph);
        }
    }
}

#[test]
fn small_graphs() {
    let edge = Graph::new(2, [(0, 1)]).unwrap();
    assert_eq!(edge_ideal::<F>(&edge).gens().len(), 1);
    let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    assert_eq!(betti_numbers(&edge_ideal::<F>(&path)).get(2, 3), 1);
    let triangle = Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
    let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    assert!(!triangle.is_isomorphic(&star));
    let relabeled = Graph::new(4, [(3, 2), (3, 0), (3, 1)]).unwrap();
    assert!(star.is_isomorphic(&relabeled));
    assert!(Graph::new(3, [(0, 1)]).is_err(), "isolated vertex");
}

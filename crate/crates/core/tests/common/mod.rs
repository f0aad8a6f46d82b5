#![allow(dead_code)]

use std::sync::Arc;

use kaci::{Field, Ideal, Monomial, MonomialOrder, Polynomial, RingDescriptor, F32003};
use proptest::prelude::*;

pub type F = F32003;

pub fn ring(n: usize) -> Arc<RingDescriptor> {
    Arc::new(RingDescriptor::numbered("x", n).unwrap())
}

/// Terms as (variables to multiply, coefficient).
type RawPoly = Vec<(Vec<usize>, i64)>;

fn build(raw: &RawPoly) -> Polynomial<F> {
    let terms = raw
        .iter()
        .map(|(vars, c)| (vars.iter().fold(Monomial::one(), |m, &v| m.mul(&Monomial::var(v))), F::from_i64(*c)))
        .collect();
    Polynomial::from_terms(terms, MonomialOrder::Grevlex)
}

fn arb_raw(n: usize, max_deg: usize, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    (1..=max_deg).prop_flat_map(move |d| {
        prop::collection::vec((prop::collection::vec(0..n, d), 1i64..32003), 1..=max_terms)
    })
}

/// Homogeneous ideals with sparse generators.
pub fn arb_ideal(max_vars: usize, max_gens: usize, max_deg: usize) -> impl Strategy<Value = Ideal<F>> {
    (2..=max_vars)
        .prop_flat_map(move |n| (Just(n), prop::collection::vec(arb_raw(n, max_deg, 3), 1..=max_gens)))
        .prop_filter_map("all generators cancelled", |(n, raws): (usize, Vec<RawPoly>)| {
            let gens: Vec<Polynomial<F>> = raws.iter().map(build).filter(|p| !p.is_zero()).collect();
            Ideal::new(ring(n), gens).ok()
        })
}

/// An ideal together with a form in the same ring.
pub fn arb_ideal_and_form(max_vars: usize, max_gens: usize, max_deg: usize) -> impl Strategy<Value = (Ideal<F>, Polynomial<F>)> {
    arb_ideal(max_vars, max_gens, max_deg)
        .prop_flat_map(move |i| {
            let n = i.nvars();
            (Just(i), arb_raw(n, max_deg, 3))
        })
        .prop_filter_map("zero form", |(i, raw)| {
            let f = build(&raw);
            (!f.is_zero()).then_some((i, f))
        })
}

pub fn parse(src: &str) -> Ideal<F> {
    kaci::parse::parse_ideal_file::<F>(src, MonomialOrder::Grevlex).unwrap().ideal().unwrap()
}

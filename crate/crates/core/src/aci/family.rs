//! Seeded generators for the two Koszul shapes and for unstructured
//! quadratic almost complete intersections.

use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{linear_form, minors, span_rank};
use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{height, is_regular_on, minimal_generators};
use crate::hilbert::binomial;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{Ideal, RingDescriptor};

/// Attempts per randomized slot.
pub const DEFAULT_RETRY_BUDGET: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    /// One linear syzygy: `(xz, zw, q_3, ..., q_{g+1})`.
    One,
    /// Two linear syzygies: `I_2(M) + (q_4, ..., q_{g+1})`.
    Two,
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "one" | "1" => Ok(Case::One),
            "two" | "2" => Ok(Case::Two),
            _ => Err(Error::InvalidArgument(format!("unknown case `{s}` (expected one or two)"))),
        }
    }
}

/// The Betti table of `S/I` for a Koszul almost complete intersection of
/// height `g` with one or two linear syzygies.
pub fn predicted_betti(g: usize, case: Case) -> Result<BettiTable> {
    let min = if case == Case::One { 1 } else { 2 };
    if g < min {
        return Err(Error::InvalidArgument(format!("g = {g} is too small for case {case:?}")));
    }
    let g = g as i64;
    let c = |n: i64, k: i64| binomial(n, k) as usize;
    let mut t = BettiTable::new();
    t.add(0, 0, 1);
    for i in 1..=g + 1 {
        let (top, lin) = match case {
            Case::One => (c(g - 1, i - 1) + c(g, i), c(g - 1, i - 2)),
            Case::Two => (3 * c(g - 2, i - 1) + c(g - 2, i), 2 * c(g - 2, i - 2)),
        };
        t.add(i as usize, 2 * i as u32, top);
        t.add(i as usize, 2 * i as u32 - 1, lin);
    }
    Ok(t)
}

fn grevlex_ring(n: usize) -> Result<Arc<RingDescriptor>> {
    Ok(Arc::new(RingDescriptor::numbered("x", n)?))
}

pub(crate) fn random_linear<F: Field, R: Rng>(rng: &mut R, n: usize) -> Polynomial<F> {
    let c: Vec<F> = (0..n).map(|_| F::random(rng)).collect();
    linear_form(&c, MonomialOrder::Grevlex)
}

pub(crate) fn random_quadric<F: Field, R: Rng>(rng: &mut R, n: usize) -> Polynomial<F> {
    let basis = Monomial::all_of_degree(n, 2);
    let c: Vec<F> = basis.iter().map(|_| F::random(rng)).collect();
    Polynomial::from_coefficients(&c, &basis, MonomialOrder::Grevlex)
}

fn exhausted(what: &str, budget: usize) -> Error {
    Error::RetryBudgetExhausted(format!("{what} after {budget} attempts"))
}

/// Extends `base` by `count` random quadrics, each regular on the quotient
/// by the previous ones.
fn extend_regular<F: Field, R: Rng>(
    rng: &mut R,
    base: Ideal<F>,
    count: usize,
    budget: usize,
) -> Result<Ideal<F>> {
    let n = base.nvars();
    let mut cur = base;
    for slot in 0..count {
        let q = (0..budget)
            .map(|_| random_quadric::<F, _>(rng, n))
            .find(|q| is_regular_on(q, &cur))
            .ok_or_else(|| exhausted(&format!("no regular quadric for slot {}", slot + 1), budget))?;
        cur = cur.plus(&[q])?;
    }
    Ok(cur)
}

fn check_size(g: usize, nvars: usize, need: usize) -> Result<()> {
    if nvars < (g + 1).max(need) {
        return Err(Error::InvalidArgument(format!("{nvars} variables are too few for g = {g}")));
    }
    Ok(())
}

fn certify_height<F: Field>(ideal: Ideal<F>, g: usize) -> Result<Ideal<F>> {
    match height(&ideal) {
        h if h == g as i64 => Ok(ideal),
        h => Err(Error::Internal(format!("generated ideal has height {h}, expected {g}"))),
    }
}

/// `(xz, zw, q_3, ..., q_{g+1})` in `x1..x{nvars}` with random independent
/// linear forms `x, z, w` and random quadrics regular on `S/(xz, zw)`.
pub fn generate_family_one<F: Field>(g: usize, nvars: usize, seed: u64, budget: usize) -> Result<Ideal<F>> {
    if g == 0 {
        return Err(Error::InvalidArgument("g must be at least 1".into()));
    }
    check_size(g, nvars, 3)?;
    let ring = grevlex_ring(nvars)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (x, z, w) = (0..budget)
        .map(|_| {
            let v: [Polynomial<F>; 3] = std::array::from_fn(|_| random_linear(&mut rng, nvars));
            v
        })
        .find(|v| span_rank(v, nvars, 1) == 3)
        .map(|[x, z, w]| (x, z, w))
        .ok_or_else(|| exhausted("no independent x, z, w", budget))?;
    let base = Ideal::new(ring, vec![x.mul_poly(&z), z.mul_poly(&w)])?;
    certify_height(extend_regular(&mut rng, base, g - 1, budget)?, g)
}

/// `I_2(M) + (q_4, ..., q_{g+1})` with a random 3x2 matrix `M` of linear
/// forms, `ht I_2(M) = 2`, and random quadrics regular on `S/I_2(M)`.
pub fn generate_family_two<F: Field>(g: usize, nvars: usize, seed: u64, budget: usize) -> Result<Ideal<F>> {
    if g < 2 {
        return Err(Error::InvalidArgument("g must be at least 2".into()));
    }
    check_size(g, nvars, 2)?;
    let ring = grevlex_ring(nvars)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut base = None;
    for _ in 0..budget {
        let m: [[Polynomial<F>; 2]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| random_linear(&mut rng, nvars)));
        let mins = minors(&m);
        if span_rank(&mins, nvars, 2) < 3 {
            continue;
        }
        let i2 = Ideal::new(ring.clone(), mins.to_vec())?;
        if height(&i2) == 2 {
            base = Some(i2);
            break;
        }
    }
    let base = base.ok_or_else(|| exhausted("no 3x2 matrix with ht I_2(M) = 2", budget))?;
    certify_height(extend_regular(&mut rng, base, g - 2, budget)?, g)
}

/// A random quadratic almost complete intersection of height `g`.
///
/// Generic quadrics form a complete intersection, so each attempt builds a
/// low-height core and pads it with random quadrics: either `c + 1` random
/// quadrics inside an ideal of `c` random linear forms (`c` in `1..=g`), or
/// for `g >= 2` and one attempt in three, the 2-minors of a random 3x2
/// matrix of linear forms. Attempts are resampled until the height is `g`
/// and the `g + 1` quadrics are minimal generators.
pub fn random_quadratic_aci<F: Field>(g: usize, nvars: usize, seed: u64, budget: usize) -> Result<Ideal<F>> {
    if g == 0 {
        return Err(Error::InvalidArgument("g must be at least 1".into()));
    }
    check_size(g, nvars, 2)?;
    let ring = grevlex_ring(nvars)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let (c, mut qs) = if g >= 2 && rng.gen_range(0..3) == 0 {
            let m: [[Polynomial<F>; 2]; 3] =
                std::array::from_fn(|_| std::array::from_fn(|_| random_linear(&mut rng, nvars)));
            (2, minors(&m).to_vec())
        } else {
            let c = rng.gen_range(1..=g);
            let ls: Vec<Polynomial<F>> = (0..c).map(|_| random_linear(&mut rng, nvars)).collect();
            let qs = (0..=c)
                .map(|_| {
                    ls.iter().fold(Polynomial::zero(MonomialOrder::Grevlex), |acc, l| {
                        acc.add_poly(&l.mul_poly(&random_linear(&mut rng, nvars)))
                    })
                })
                .collect();
            (c, qs)
        };
        qs.extend((c..g).map(|_| random_quadric::<F, _>(&mut rng, nvars)));
        if span_rank(&qs, nvars, 2) < g + 1 {
            continue;
        }
        let ideal = Ideal::new(ring.clone(), qs)?;
        if height(&ideal) == g as i64 && minimal_generators(&ideal)?.gens().len() == g + 1 {
            return Ok(ideal);
        }
    }
    Err(exhausted("no quadratic almost complete intersection", budget))
}

/// A minimal generating set `q_1; q_2, ..., q_{g+1}` with the tail a regular
/// sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularSubsequence<F: Field> {
    pub first: Polynomial<F>,
    pub regular: Vec<Polynomial<F>>,
}

/// Builds `q_{g+1}, q_g, ..., q_2` one at a time as random combinations of the
/// generators, each regular on the quotient by those already chosen, then
/// completes them to a minimal generating set.
pub fn extract_regular_subsequence<F: Field>(ideal: &Ideal<F>, seed: u64, budget: usize) -> Result<RegularSubsequence<F>> {
    let gens = minimal_generators(ideal)?.into_gens();
    let n = ideal.nvars();
    let g = height(ideal);
    if gens.iter().any(|q| q.degree() != Some(2)) || gens.len() as i64 != g + 1 {
        return Err(Error::NotAci(format!("{} minimal generators with height {g}", gens.len())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = gens[0].order();
    let combo = |rng: &mut ChaCha8Rng| {
        gens.iter().fold(Polynomial::zero(order), |acc, q| acc.add_poly(&q.scale(&F::random(rng))))
    };
    let mut chosen: Vec<Polynomial<F>> = Vec::new();
    let mut cur: Option<Ideal<F>> = None;
    for slot in 0..g as usize {
        let q = (0..budget)
            .map(|_| combo(&mut rng))
            .find(|q| match &cur {
                None => !q.is_zero(),
                Some(j) => is_regular_on(q, j),
            })
            .ok_or_else(|| exhausted(&format!("slot {} (probably not an almost complete intersection)", slot + 2), budget))?;
        cur = Some(match cur {
            None => Ideal::new(ideal.ring().clone(), vec![q.clone()])?,
            Some(j) => j.plus(std::slice::from_ref(&q))?,
        });
        chosen.push(q);
    }
    let first = gens
        .iter()
        .find(|q| {
            let mut all = chosen.clone();
            all.push((*q).clone());
            span_rank(&all, n, 2) == all.len()
        })
        .cloned()
        .ok_or_else(|| Error::Internal("regular quadrics span every generator".into()))?;
    Ok(RegularSubsequence { first, regular: chosen })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::F32003;

    #[test]
    fn predicted_tables() {
        let one2 = predicted_betti(2, Case::One).unwrap();
        assert_eq!(one2, BettiTable::from_entries([((0, 0), 1), ((1, 2), 3), ((2, 3), 1), ((2, 4), 2), ((3, 5), 1)]));
        let two3 = predicted_betti(3, Case::Two).unwrap();
        assert_eq!(
            two3,
            BettiTable::from_entries([((0, 0), 1), ((1, 2), 4), ((2, 3), 2), ((2, 4), 3), ((3, 5), 2)])
        );
        assert_eq!(two3.totals(), vec![1, 4, 5, 2]);
        let one1 = predicted_betti(1, Case::One).unwrap();
        assert_eq!(one1, BettiTable::from_entries([((0, 0), 1), ((1, 2), 2), ((2, 3), 1)]));
        assert!(predicted_betti(1, Case::Two).is_err());
    }

    #[test]
    fn family_one_small() {
        let i = generate_family_one::<F32003>(1, 3, 0, DEFAULT_RETRY_BUDGET).unwrap();
        assert_eq!(i.gens().len(), 2);
        assert_eq!(height(&i), 1);
    }

    #[test]
    fn deterministic_replay() {
        for seed in 0..3 {
            let a = random_quadratic_aci::<F32003>(3, 5, seed, DEFAULT_RETRY_BUDGET).unwrap();
            let b = random_quadratic_aci::<F32003>(3, 5, seed, DEFAULT_RETRY_BUDGET).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn regular_tail() {
        let i = generate_family_one::<F32003>(3, 5, 1, DEFAULT_RETRY_BUDGET).unwrap();
        let r = extract_regular_subsequence(&i, 0, DEFAULT_RETRY_BUDGET).unwrap();
        assert_eq!(r.regular.len(), 3);
        assert!(crate::groebner::is_regular_sequence(&r.regular, None, i.ring()));
    }
}

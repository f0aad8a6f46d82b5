//! Monomial ideals: minimalization, dimension and Hilbert numerators.

use serde::{Deserialize, Serialize};

use crate::monomial::Monomial;
use crate::tpoly::TPoly;

/// A monomial ideal kept as its minimal generating set, sorted by degree and
/// then exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.exponents(nvars).cmp(a.exponents(nvars))));
        all.dedup();
        let mut min: Vec<Monomial> = Vec::new();
        for m in all {
            if !min.iter().any(|g| g.divides(&m)) {
                min.push(m);
            }
        }
        MonomialIdeal { nvars, gens: min }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    /// Krull dimension of `S/M`: `n` minus the smallest set of variables
    /// meeting every generator's support. `-1` for the unit ideal.
    pub fn dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let supports: Vec<u32> = self.gens.iter().map(|g| g.support()).collect();
        let mut best = self.nvars as u32;
        min_cover(&supports, 0, 0, &mut best);
        self.nvars as i64 - best as i64
    }

    pub fn height(&self) -> i64 {
        self.nvars as i64 - self.dimension()
    }

    /// `(M : m)`.
    pub fn quotient(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nvars,
            self.gens.iter().map(|g| {
                let l = g.lcm(m);
                m.quotient_of(&l).unwrap()
            }),
        )
    }

    /// Numerator `K(t)` of the Hilbert series `K(t) / (1-t)^n` of `S/M`.
    pub fn hilbert_numerator(&self) -> TPoly {
        numerator(&self.gens)
    }

    /// Squarefree check.
    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| (0..self.nvars).all(|i| g.exp(i) <= 1))
    }
}

fn min_cover(supports: &[u32], chosen: u32, size: u32, best: &mut u32) {
    if size >= *best {
        return;
    }
    // an unhit support with fewest variables
    let unhit = supports.iter().filter(|&&s| s & chosen == 0).min_by_key(|s| s.count_ones());
    match unhit {
        None => *best = size,
        Some(&s) => {
            let mut bits = s;
            while bits != 0 {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                min_cover(supports, chosen | (1 << v), size + 1, best);
            }
        }
    }
}

fn numerator(gens: &[Monomial]) -> TPoly {
    if gens.is_empty() {
        return TPoly::one();
    }
    // split off generators coprime to all others
    let mut acc = TPoly::one();
    let mut rest: Vec<Monomial> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_one() {
            return TPoly::zero();
        }
        if gens.iter().enumerate().all(|(j, h)| i == j || g.is_coprime(h)) {
            acc = acc.mul(&TPoly::one_minus_t_pow(g.degree()));
        } else {
            rest.push(*g);
        }
    }
    if rest.is_empty() {
        return acc;
    }
    // K(M) = K(M + (x)) + t K(M : x) for the variable x in the most generators
    let mut count = [0usize; crate::MAX_VARS];
    for g in &rest {
        let mut s = g.support();
        while s != 0 {
            count[s.trailing_zeros() as usize] += 1;
            s &= s - 1;
        }
    }
    let v = (0..crate::MAX_VARS).max_by_key(|&i| (count[i], std::cmp::Reverse(i))).unwrap();
    let x = Monomial::var(v);
    let mut plus: Vec<Monomial> = rest.iter().filter(|g| g.exp(v) == 0).copied().collect();
    plus.push(x);
    let colon = MonomialIdeal::new(crate::MAX_VARS, rest.iter().map(|g| x.quotient_of(&g.lcm(&x)).unwrap()));
    let k = numerator(&plus).add(&numerator(colon.gens()).shift(1));
    acc.mul(&k)
}

/// Serializable form used in reports.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MonomialIdealRepr {
    pub gens: Vec<Vec<u16>>,
}

impl From<&MonomialIdeal> for MonomialIdealRepr {
    fn from(m: &MonomialIdeal) -> Self {
        MonomialIdealRepr { gens: m.gens.iter().map(|g| g.exponents(m.nvars).to_vec()).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn minimalizes() {
        let i = MonomialIdeal::new(3, [m(&[1, 1, 0]), m(&[2, 1, 0]), m(&[1, 1, 0]), m(&[0, 0, 2])]);
        assert_eq!(i.gens().len(), 2);
    }

    #[test]
    fn dimension_by_vertex_cover() {
        // (xy, xz, xw) in 4 vars: cover {x}
        let i = MonomialIdeal::new(4, [m(&[1, 1, 0, 0]), m(&[1, 0, 1, 0]), m(&[1, 0, 0, 1])]);
        assert_eq!(i.dimension(), 3);
        assert_eq!(i.height(), 1);
        // (xz, zw) in 4 vars: height 1
        let j = MonomialIdeal::new(4, [m(&[1, 0, 1, 0]), m(&[0, 0, 1, 1])]);
        assert_eq!(j.height(), 1);
        assert_eq!(MonomialIdeal::new(2, [Monomial::one()]).dimension(), -1);
        assert_eq!(MonomialIdeal::new(3, []).dimension(), 3);
    }

    #[test]
    fn numerators() {
        // S/(x^2): 1 - t^2
        let i = MonomialIdeal::new(1, [m(&[2])]);
        assert_eq!(i.hilbert_numerator(), TPoly::from_coeffs(vec![1, 0, -1]));
        // S/(xy, yz): 1 - 2t^2 + t^3
        let j = MonomialIdeal::new(3, [m(&[1, 1, 0]), m(&[0, 1, 1])]);
        assert_eq!(j.hilbert_numerator(), TPoly::from_coeffs(vec![1, 0, -2, 1]));
    }
}

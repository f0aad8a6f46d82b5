//! Exponent-vector monomials and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Upper bound on the number of ring variables.
pub const MAX_VARS: usize = 24;

/// A monomial `x^a` stored as a dense exponent vector.
///
/// Slots past the ring's variable count stay zero, so equality, hashing and
/// every order below are independent of the ring size.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

const WORDS: usize = MAX_VARS / 4;

impl Monomial {
    /// The exponents packed four to a word, for fast equality scans.
    #[inline]
    fn words(&self) -> [u64; WORDS] {
        // SAFETY: both types are plain integers of the same size.
        unsafe { std::mem::transmute::<[u16; MAX_VARS], [u64; WORDS]>(self.exps) }
    }

    pub fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], deg: 0 }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Self::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m.deg = exps.iter().map(|&e| e as u32).sum();
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, f) in exps.iter_mut().zip(o.exps.iter()) {
            *e += *f;
        }
        Monomial { exps, deg: self.deg + o.deg }
    }

    #[inline]
    pub fn divides(&self, o: &Monomial) -> bool {
        self.deg <= o.deg && self.exps.iter().zip(o.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, if `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Option<Monomial> {
        if !self.divides(o) {
            return None;
        }
        let mut exps = o.exps;
        for (e, f) in exps.iter_mut().zip(self.exps.iter()) {
            *e -= *f;
        }
        Some(Monomial { exps, deg: o.deg - self.deg })
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut exps = self.exps;
        let mut deg = 0;
        for (e, f) in exps.iter_mut().zip(o.exps.iter()) {
            *e = (*e).max(*f);
            deg += *e as u32;
        }
        Monomial { exps, deg }
    }

    pub fn is_coprime(&self, o: &Monomial) -> bool {
        self.exps.iter().zip(o.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of the variables occurring in the monomial.
    pub fn support(&self) -> u32 {
        let mut s = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                s |= 1 << i;
            }
        }
        s
    }

    pub fn with_exp(&self, i: usize, e: u16) -> Monomial {
        let mut m = *self;
        m.deg = m.deg - m.exps[i] as u32 + e as u32;
        m.exps[i] = e;
        m
    }

    /// Removes variable `i`, shifting later variables down by one.
    /// The exponent of `i` must be zero.
    pub fn drop_var(&self, i: usize) -> Monomial {
        debug_assert_eq!(self.exps[i], 0);
        let mut exps = [0u16; MAX_VARS];
        let mut k = 0;
        for (j, &e) in self.exps.iter().enumerate() {
            if j != i {
                exps[k] = e;
                k += 1;
            }
        }
        Monomial { exps, deg: self.deg }
    }

    /// Embeds into a larger ring: variable `j` goes to slot `map[j]`.
    pub fn remap(&self, map: &[usize]) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for (j, &t) in map.iter().enumerate() {
            exps[t] = self.exps[j];
        }
        Monomial { exps, deg: self.deg }
    }

    /// All monomials of degree `d` in `n` variables, in descending lex order.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        fn rec(n: usize, i: usize, left: u32, cur: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
            if i + 1 == n {
                cur[i] = left as u16;
                out.push(Monomial::from_exponents(&cur[..n]));
                cur[i] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(n, i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        if n == 0 {
            if d == 0 {
                out.push(Monomial::one());
            }
            return out;
        }
        rec(n, 0, d, &mut [0; MAX_VARS], &mut out);
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.exps.iter().rposition(|&e| e > 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..n])
    }
}

/// The rule applied inside a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BaseOrder {
    Grevlex,
    Lex,
}

/// A global monomial order. Variables are ranked in declaration order
/// (`x_0 > x_1 > ...`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Elimination order: the variables in `greater` (bitmask) are compared
    /// first; ties are broken on the remaining variables. Both parts use
    /// `inner`.
    Block { greater: u32, inner: BaseOrder },
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::Grevlex
    }
}

#[inline]
fn lex_masked(a: &Monomial, b: &Monomial, mask: u32) -> Ordering {
    for i in 0..MAX_VARS {
        if mask & (1 << i) != 0 && a.exps[i] != b.exps[i] {
            return a.exps[i].cmp(&b.exps[i]);
        }
    }
    Ordering::Equal
}

#[inline]
fn grevlex_masked(a: &Monomial, b: &Monomial, mask: u32) -> Ordering {
    let (mut da, mut db) = (0u32, 0u32);
    for i in 0..MAX_VARS {
        if mask & (1 << i) != 0 {
            da += a.exps[i] as u32;
            db += b.exps[i] as u32;
        }
    }
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..MAX_VARS).rev() {
        if mask & (1 << i) != 0 && a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

const ALL: u32 = u32::MAX;

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => {
                if a.deg != b.deg {
                    return a.deg.cmp(&b.deg);
                }
                let (wa, wb) = (a.words(), b.words());
                for k in (0..WORDS).rev() {
                    if wa[k] != wb[k] {
                        for i in (4 * k..4 * k + 4).rev() {
                            if a.exps[i] != b.exps[i] {
                                return b.exps[i].cmp(&a.exps[i]);
                            }
                        }
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => {
                let (wa, wb) = (a.words(), b.words());
                for k in 0..WORDS {
                    if wa[k] != wb[k] {
                        return a.exps[4 * k..4 * k + 4].cmp(&b.exps[4 * k..4 * k + 4]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { greater, inner } => {
                let f = match inner {
                    BaseOrder::Grevlex => grevlex_masked,
                    BaseOrder::Lex => lex_masked,
                };
                f(a, b, greater).then_with(|| f(a, b, ALL & !greater))
            }
        }
    }

    /// Block order with the given variables forming the greater block.
    pub fn block(vars: &[usize], inner: BaseOrder) -> Self {
        let greater = vars.iter().fold(0u32, |m, &v| m | (1 << v));
        MonomialOrder::Block { greater, inner }
    }

    /// Parses `grevlex`, `lex`, or `block:v1,v2,...[:lex]` given variable names.
    pub fn parse(spec: &str, names: &[String]) -> Result<Self, String> {
        match spec {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => {
                let rest = spec
                    .strip_prefix("block:")
                    .ok_or_else(|| format!("unknown order `{spec}`"))?;
                let (vars, inner) = match rest.rsplit_once(':') {
                    Some((v, "lex")) => (v, BaseOrder::Lex),
                    Some((v, "grevlex")) => (v, BaseOrder::Grevlex),
                    _ => (rest, BaseOrder::Grevlex),
                };
                let mut idx = Vec::new();
                for v in vars.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let i = names
                        .iter()
                        .position(|n| n == v)
                        .ok_or_else(|| format!("unknown variable `{v}` in block order"))?;
                    idx.push(i);
                }
                if idx.is_empty() {
                    return Err("empty block".into());
                }
                Ok(Self::block(&idx, inner))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_degree_tie() {
        // x > y > z: x^2 vs xy
        assert_eq!(MonomialOrder::Grevlex.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        // xz vs y^2: grevlex puts y^2 first
        assert_eq!(MonomialOrder::Grevlex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn block_eliminates() {
        // y (var 0) in the greater block beats x^10 (var 1)
        let o = MonomialOrder::block(&[0], BaseOrder::Grevlex);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 10])), Ordering::Greater);
        let o = MonomialOrder::block(&[0], BaseOrder::Lex);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 10])), Ordering::Greater);
    }

    #[test]
    fn lex_on_generic_matrix_variables() {
        // x12 > x11 > x22 > x21 > x32 > x31
        let a = m(&[0, 1, 1, 0, 0, 0]); // x11 x22
        let b = m(&[1, 0, 0, 1, 0, 0]); // x12 x21
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn enumerate_degree() {
        let all = Monomial::all_of_degree(3, 2);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], m(&[2, 0, 0]));
        assert_eq!(Monomial::all_of_degree(4, 0), vec![Monomial::one()]);
    }

    #[test]
    fn parse_orders() {
        let names: Vec<String> = ["y", "x"].iter().map(|s| s.to_string()).collect();
        assert_eq!(MonomialOrder::parse("block:y", &names).unwrap(), MonomialOrder::block(&[0], BaseOrder::Grevlex));
        assert_eq!(MonomialOrder::parse("block:y:lex", &names).unwrap(), MonomialOrder::block(&[0], BaseOrder::Lex));
        assert!(MonomialOrder::parse("block:q", &names).is_err());
        assert!(MonomialOrder::parse("weird", &names).is_err());
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::Grevlex,
            MonomialOrder::Lex,
            MonomialOrder::block(&[1, 3], BaseOrder::Grevlex),
            MonomialOrder::block(&[0, 2], BaseOrder::Lex),
        ]
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..4, 5).prop_map(|v| Monomial::from_exponents(&v))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2500))]
        #[test]
        fn orders_are_total_multiplicative_global(a in mono(), b in mono(), c in mono()) {
            for o in orders() {
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                if ab == Ordering::Greater && o.cmp(&b, &c) == Ordering::Greater {
                    prop_assert_eq!(o.cmp(&a, &c), Ordering::Greater);
                }
                prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
                if !c.is_one() {
                    prop_assert_eq!(o.cmp(&a.mul(&c), &a), Ordering::Greater);
                }
            }
        }
    }
}

//! Sparse multivariate polynomials.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};

/// A polynomial as a list of `(monomial, coefficient)` pairs sorted strictly
/// descending under the carried monomial order, with no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial<F: Field> {
    terms: Vec<(Monomial, F)>,
    order: MonomialOrder,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.order).terms
        }
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    pub fn zero(order: MonomialOrder) -> Self {
        Polynomial { terms: Vec::new(), order }
    }

    pub fn constant(c: F, order: MonomialOrder) -> Self {
        Self::term(c, Monomial::one(), order)
    }

    pub fn term(c: F, m: Monomial, order: MonomialOrder) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { terms, order }
    }

    pub fn var(i: usize, order: MonomialOrder) -> Self {
        Self::term(F::one(), Monomial::var(i), order)
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(mut terms: Vec<(Monomial, F)>, order: MonomialOrder) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.clone() + c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { terms: out, order }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<F> {
        self.terms.first().map(|t| t.1.clone())
    }

    /// Total degree of the highest-degree term.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(F::zero)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { terms, order }
    }

    /// Highest variable index used plus one.
    pub fn var_span(&self) -> usize {
        self.terms
            .iter()
            .map(|(m, _)| (0..crate::MAX_VARS).rposition(|i| m.exp(i) > 0).map_or(0, |p| p + 1))
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a.clone() * c.clone())).collect();
        Polynomial { terms, order: self.order }
    }

    /// Returns `c * m * self`.
    pub fn mul_term(&self, c: &F, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a.clone() * c.clone())).collect();
        Polynomial { terms, order: self.order }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&c.inv().unwrap()),
        }
    }

    /// `self + c * m * other` by a single merge pass.
    pub fn add_scaled(&self, c: &F, m: &Monomial, other: &Self) -> Self {
        let order = self.order;
        let other = if other.order == order { std::borrow::Cow::Borrowed(other) } else { std::borrow::Cow::Owned(other.with_order(order)) };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            let bm = b[j].0.mul(m);
            match order.cmp(&a[i].0, &bm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm, b[j].1.clone() * c.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = a[i].1.clone() + b[j].1.clone() * c.clone();
                    if !s.is_zero() {
                        out.push((bm, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(t, x)| (t.mul(m), x.clone() * c.clone())));
        out.retain(|(_, x)| !x.is_zero());
        Polynomial { terms: out, order }
    }

    pub fn add_poly(&self, other: &Self) -> Self {
        self.add_scaled(&F::one(), &Monomial::one(), other)
    }

    pub fn sub_poly(&self, other: &Self) -> Self {
        self.add_scaled(&(-F::one()), &Monomial::one(), other)
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        let mut acc = Self::zero(self.order);
        let (small, big) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        for (m, c) in &small.terms {
            acc = acc.add_scaled(c, m, big);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(F::one(), self.order);
        for _ in 0..e {
            acc = acc.mul_poly(self);
        }
        acc
    }

    /// Substitutes `value` for variable `var`.
    pub fn substitute(&self, var: usize, value: &Self) -> Self {
        let mut acc = Self::zero(self.order);
        let mut powers: Vec<Self> = vec![Self::constant(F::one(), self.order)];
        for (m, c) in &self.terms {
            let e = m.exp(var) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul_poly(value);
                powers.push(next);
            }
            let rest = m.with_exp(var, 0);
            acc = acc.add_scaled(c, &rest, &powers[e]);
        }
        acc
    }

    /// Applies `f` to every monomial (which must stay injective) and re-sorts.
    pub fn map_monomials(&self, order: MonomialOrder, f: impl Fn(&Monomial) -> Monomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect(), order)
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect();
        Polynomial { terms, order: self.order }
    }

    /// Coefficient vector against a monomial basis (missing monomials give zero).
    pub fn coefficients_in(&self, basis: &[Monomial]) -> Vec<F> {
        basis.iter().map(|m| self.coeff(m)).collect()
    }

    /// Builds a polynomial from a coefficient vector on `basis`.
    pub fn from_coefficients(coeffs: &[F], basis: &[Monomial], order: MonomialOrder) -> Self {
        Self::from_terms(basis.iter().copied().zip(coeffs.iter().cloned()).collect(), order)
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, o: Self) -> Polynomial<F> {
        self.add_poly(o)
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, o: Self) -> Polynomial<F> {
        self.sub_poly(o)
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, o: Self) -> Polynomial<F> {
        self.mul_poly(o)
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.scale(&(-F::one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::F32003;
    use proptest::prelude::*;

    type P = Polynomial<F32003>;
    const O: MonomialOrder = MonomialOrder::Grevlex;

    fn v(i: usize) -> P {
        P::var(i, O)
    }

    #[test]
    fn product_and_cancellation() {
        let (x, z, w) = (v(0), v(2), v(3));
        let xz = &x * &z;
        let zw = &z * &w;
        let prod = &xz * &zw;
        assert_eq!(prod, P::term(F32003::from_i64(1), Monomial::from_exponents(&[1, 0, 2, 1]), O));
        assert!((&xz + &(-&xz)).is_zero());
    }

    #[test]
    fn two_by_two_determinant() {
        let (x, y, z, w) = (v(0), v(1), v(2), v(3));
        // l = (x, y), h = (z, w): l1 h2 - l2 h1
        let det = &(&x * &w) - &(&y * &z);
        assert_eq!(det.len(), 2);
        assert!(det.is_homogeneous());
        assert_eq!(det.coeff(&Monomial::from_exponents(&[0, 1, 1, 0])), F32003::from_i64(-1));
    }

    #[test]
    fn substitution() {
        let (x, y) = (v(0), v(1));
        let f = &(&x * &x) + &y; // x^2 + y
        let g = f.substitute(0, &(&y + &y)); // 4y^2 + y
        assert_eq!(g.coeff(&Monomial::from_exponents(&[0, 2])), F32003::from_i64(4));
        assert_eq!(g.len(), 2);
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        proptest::collection::vec((proptest::collection::vec(0u16..3, 4), -5i64..5), 0..6)
            .prop_map(|ts| P::from_terms(ts.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), F32003::from_i64(c))).collect(), O))
    }

    fn arb_form(d: u32) -> impl Strategy<Value = P> {
        let basis = Monomial::all_of_degree(4, d);
        proptest::collection::vec(-3i64..3, basis.len()).prop_map(move |cs| {
            let cs: Vec<F32003> = cs.into_iter().map(F32003::from_i64).collect();
            P::from_coefficients(&cs, &basis, O)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f * &g, &g * &f);
        }

        #[test]
        fn homogeneity_preserved(f in arb_form(2), g in arb_form(2), h in arb_form(1)) {
            prop_assert!((&f + &g).is_homogeneous());
            let p = &f * &h;
            prop_assert!(p.is_homogeneous());
            if !p.is_zero() { prop_assert_eq!(p.degree(), Some(3)); }
        }

        #[test]
        fn reorder_keeps_value(f in arb_poly()) {
            let g = f.with_order(MonomialOrder::Lex);
            prop_assert_eq!(&g, &f);
            let h = g.with_order(O);
            prop_assert_eq!(h.terms(), f.terms());
        }
    }
}

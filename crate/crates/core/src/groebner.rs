//! Gröbner bases of ideals and the ideal operations built on them.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::module::{self, ModVec, ModuleOrder};
use crate::monomial::{Monomial, MonomialOrder};
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::Polynomial;
use crate::ring::{Ideal, RingDescriptor};
use crate::tpoly::TPoly;

/// A reduced Gröbner basis: monic elements sorted by degree, then by leading
/// monomial ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<RingDescriptor>,
    order: MonomialOrder,
    elements: Vec<Polynomial<F>>,
}

fn rank_one(order: MonomialOrder) -> ModuleOrder {
    ModuleOrder::top(order, vec![0])
}

fn to_vec<F: Field>(f: &Polynomial<F>, ord: &ModuleOrder) -> ModVec<F> {
    ModVec::from_polys(std::slice::from_ref(f), ord)
}

fn from_vec<F: Field>(v: &ModVec<F>, order: MonomialOrder) -> Polynomial<F> {
    v.to_polys(1, order).pop().unwrap()
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.degree() == Some(0))
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().unwrap()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let ord = rank_one(self.order);
        let basis: Vec<ModVec<F>> = self.elements.iter().map(|g| to_vec(g, &ord)).collect();
        let f = f.with_order(self.order);
        from_vec(&module::normal_form(&to_vec(&f, &ord), &basis, &ord), self.order)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ring.nvars(), self.leading_monomials())
    }

    /// True if every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        for (i, f) in self.elements.iter().enumerate() {
            for g in &self.elements[i + 1..] {
                let (lf, lg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
                let l = lf.lcm(&lg);
                let a = f.mul_term(&f.leading_coeff().unwrap().inv().unwrap(), &lf.quotient_of(&l).unwrap());
                let b = g.mul_term(&g.leading_coeff().unwrap().inv().unwrap(), &lg.quotient_of(&l).unwrap());
                if !self.normal_form(&a.sub_poly(&b)).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger<F: Field>(ideal: &Ideal<F>, order: MonomialOrder) -> GroebnerBasis<F> {
    let ord = rank_one(order);
    let gens: Vec<ModVec<F>> = ideal.gens().iter().map(|g| to_vec(&g.with_order(order), &ord)).collect();
    let elements = module::groebner_basis(&gens, &ord).iter().map(|v| from_vec(v, order)).collect();
    GroebnerBasis { ring: ideal.ring().clone(), order, elements }
}

pub fn normal_form<F: Field>(f: &Polynomial<F>, gb: &GroebnerBasis<F>) -> Polynomial<F> {
    gb.normal_form(f)
}

pub fn initial_ideal<F: Field>(ideal: &Ideal<F>, order: MonomialOrder) -> MonomialIdeal {
    buchberger(ideal, order).initial_ideal()
}

/// `(I : f)` with minimal generators, by the syzygy method.
pub fn colon<F: Field>(ideal: &Ideal<F>, f: &Polynomial<F>) -> Result<Ideal<F>> {
    if f.is_zero() {
        return Err(Error::ColonByZero);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous(crate::parse::format_poly(f, ideal.ring())));
    }
    let order = ideal.order();
    let ord = rank_one(order);
    let mut cols = vec![to_vec(&f.with_order(order), &ord)];
    let mut degrees = vec![f.degree().unwrap()];
    for g in ideal.gens() {
        cols.push(to_vec(g, &ord));
        degrees.push(g.degree().unwrap());
    }
    let syz = module::syzygies_of(&cols, &degrees, &ord);
    let df = f.degree().unwrap();
    let mut gens: Vec<Polynomial<F>> = Vec::new();
    for s in &syz {
        let c = s.to_polys(cols.len(), order).swap_remove(0);
        if !c.is_zero() {
            gens.push(c);
        }
    }
    debug_assert!(gens.iter().all(|g| g.degree().unwrap() + df >= 1));
    if gens.is_empty() {
        // only possible when I = 0, which Ideal rules out
        return Err(Error::Internal("empty colon".into()));
    }
    let out = Ideal::new(ideal.ring().clone(), gens)?;
    minimal_generators(&out)
}

/// `dim S/I`, or `-1` for the unit ideal.
pub fn krull_dimension<F: Field>(ideal: &Ideal<F>) -> i64 {
    initial_ideal(ideal, MonomialOrder::Grevlex).dimension()
}

pub fn height<F: Field>(ideal: &Ideal<F>) -> i64 {
    ideal.nvars() as i64 - krull_dimension(ideal)
}

/// Numerator `K(t)` of the Hilbert series `K(t) / (1-t)^n` of `S/I`, read off
/// a grevlex initial ideal.
pub fn hilbert_numerator<F: Field>(ideal: &Ideal<F>) -> TPoly {
    initial_ideal(ideal, MonomialOrder::Grevlex).hilbert_numerator()
}

/// Whether `f` is a nonzerodivisor on `S/J`.
///
/// For homogeneous `f` of degree `d > 0` the sequence
/// `0 -> ((J:f)/J)(-d) -> (S/J)(-d) -> S/J -> S/(J+f) -> 0` shows that this
/// holds exactly when `H(S/(J+f)) = (1 - t^d) H(S/J)`.
pub fn is_regular_on<F: Field>(f: &Polynomial<F>, j: &Ideal<F>) -> bool {
    let Some(d) = f.degree() else { return false };
    if d == 0 {
        return true;
    }
    let Ok(jf) = j.plus(std::slice::from_ref(f)) else { return false };
    hilbert_numerator(&jf) == hilbert_numerator(j).mul(&TPoly::one_minus_t_pow(d))
}

/// Same answer as [`is_regular_on`], decided by computing `(J : f)`.
pub fn is_regular_on_by_colon<F: Field>(f: &Polynomial<F>, j: &Ideal<F>) -> bool {
    let Ok(c) = colon(j, f) else { return false };
    let gb = buchberger(j, j.order());
    c.gens().iter().all(|g| gb.contains(g))
}

/// Whether `f_1, ..., f_k` is a regular sequence on `S/J` (on `S` if `J` is
/// `None`).
pub fn is_regular_sequence<F: Field>(fs: &[Polynomial<F>], j: Option<&Ideal<F>>, ring: &Arc<RingDescriptor>) -> bool {
    let mut cur: Option<Ideal<F>> = j.cloned();
    for f in fs {
        let ok = match &cur {
            None => !f.is_zero() && f.degree().unwrap() > 0,
            Some(c) => is_regular_on(f, c),
        };
        if !ok {
            return false;
        }
        cur = Some(match cur {
            None => match Ideal::new(ring.clone(), vec![f.clone()]) {
                Ok(i) => i,
                Err(_) => return false,
            },
            Some(c) => match c.plus(std::slice::from_ref(f)) {
                Ok(i) => i,
                Err(_) => return false,
            },
        });
    }
    true
}

fn graded_pieces<F: Field>(ideal: &Ideal<F>) -> (ModuleOrder, Vec<ModVec<F>>) {
    let ord = rank_one(ideal.order());
    (ord.clone(), ideal.gens().iter().map(|g| to_vec(g, &ord)).collect())
}

/// `dim (I / S_+ I)_d` for every degree `d` with a minimal generator.
pub fn minimal_generator_count<F: Field>(ideal: &Ideal<F>) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    for g in minimal_generators(ideal).expect("nonempty").gens() {
        *out.entry(g.degree().unwrap()).or_insert(0) += 1;
    }
    out
}

/// A minimal generating subset of the given generators.
pub fn minimal_generators<F: Field>(ideal: &Ideal<F>) -> Result<Ideal<F>> {
    let (ord, vecs) = graded_pieces(ideal);
    let keep = module::minimal_subset(&vecs, ideal.nvars(), &ord);
    let gens = keep.into_iter().map(|i| ideal.gens()[i].monic()).collect();
    Ideal::new(ideal.ring().clone(), gens)
}

pub fn ideal_contains<F: Field>(big: &Ideal<F>, small: &Ideal<F>) -> bool {
    let gb = buchberger(big, big.order());
    small.gens().iter().all(|g| gb.contains(g))
}

pub fn ideal_eq<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> bool {
    let o = a.order();
    buchberger(a, o).elements() == buchberger(&b.with_order(o), o).elements()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::F32003;
    use crate::parse::parse_ideal_file;

    fn ideal(src: &str) -> Ideal<F32003> {
        parse_ideal_file::<F32003>(src, MonomialOrder::Grevlex).unwrap().ideal().unwrap()
    }

    #[test]
    fn normal_forms() {
        let i = ideal("ring Fp[x,y,z,w]; ideal (x*y, x*w);");
        let gb = buchberger(&i, MonomialOrder::Grevlex);
        let r = i.ring();
        let p = |s: &str| crate::parse::parse_poly::<F32003>(s, r, MonomialOrder::Grevlex).unwrap();
        assert!(gb.normal_form(&p("x^2*y")).is_zero());
        assert_eq!(gb.normal_form(&p("x^2")), p("x^2"));
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let i = ideal("ring Fp[x,y,z,w]; ideal (x*y, x*w, z^2);");
        let gb = buchberger(&i, MonomialOrder::Grevlex);
        assert_eq!(gb.len(), 3);
        assert!(gb.is_groebner());
    }

    #[test]
    fn colons_of_the_filtration_example() {
        let i = ideal("ring Fp[x,y,z,w]; ideal (x*y, x*w, z^2);");
        let r = i.ring().clone();
        let p = |s: &str| crate::parse::parse_poly::<F32003>(s, &r, MonomialOrder::Grevlex).unwrap();
        let c = colon(&i, &p("(x-y)*z")).unwrap();
        assert!(ideal_eq(&c, &ideal("ring Fp[x,y,z,w]; ideal (x*y, x*w, z);")));
        let j = ideal("ring Fp[x,y,z,w]; ideal (x*y, x*w, z^2, (x-y)*z);");
        let c = colon(&j, &p("x^2+z*w")).unwrap();
        assert!(ideal_eq(&c, &ideal("ring Fp[x,y,z,w]; ideal (x*w, y, z);")));
        assert_eq!(c.gens().len(), 3);
        assert!(ideal_eq(&colon(&i, &p("1")).unwrap(), &i));
        assert_eq!(colon(&i, &p("0")), Err(Error::ColonByZero));
    }

    #[test]
    fn dimension_and_regularity() {
        let i = ideal("ring Fp[x,y,z,w]; ideal (x*y, x*z, x*w);");
        assert_eq!(krull_dimension(&i), 3);
        let j = ideal("ring Fp[x,y,z,w]; ideal (x*y);");
        let r = j.ring().clone();
        let p = |s: &str| crate::parse::parse_poly::<F32003>(s, &r, MonomialOrder::Grevlex).unwrap();
        assert!(!is_regular_on(&p("x"), &j));
        assert!(!is_regular_on(&p("x*y"), &j));
        assert!(is_regular_on(&p("z"), &j));
        assert!(is_regular_on_by_colon(&p("z"), &j));
        assert!(!is_regular_on_by_colon(&p("y"), &j));
        assert_eq!(krull_dimension(&ideal("ring Fp[x,y]; ideal (x, y, 1);")), -1);
    }

    #[test]
    fn generator_counts() {
        let i = ideal("ring Fp[x,z,w]; ideal (x*z, z*w, z*x);");
        assert_eq!(minimal_generator_count(&i), BTreeMap::from([(2, 2)]));
        let j = ideal("ring Fp[x]; ideal (x^2, x^3);");
        assert_eq!(minimal_generator_count(&j), BTreeMap::from([(2, 1)]));
        let k = ideal("ring Fp[x,y,z,w]; ideal (x*y, x*w, (x-y)*z, z^2, x^2+z*w);");
        assert_eq!(minimal_generator_count(&k), BTreeMap::from([(2, 5)]));
    }
}

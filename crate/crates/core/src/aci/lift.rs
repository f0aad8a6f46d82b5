//! Lifts of Koszul almost complete intersections to ideals with a quadratic
//! Gröbner basis, and their verification.

use std::sync::Arc;

use serde_json::{json, Value};

use super::{AciClassification, AciShape, Case};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, hilbert_numerator, ideal_eq};
use crate::monomial::{BaseOrder, Monomial, MonomialOrder};
use crate::parse::format_poly;
use crate::poly::Polynomial;
use crate::ring::{Ideal, RingDescriptor};
use crate::tpoly::TPoly;

/// A lift `A = T/Ĩ` of `R = S/I` together with linear forms `J` such that
/// `A/J ≅ R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LgCertificate<F: Field> {
    pub case: Case,
    /// The extended ring `T`: new variables first, then those of `S`.
    pub ring: Arc<RingDescriptor>,
    /// Order under which `Ĩ` has a quadratic Gröbner basis.
    pub order: MonomialOrder,
    pub lifted: Ideal<F>,
    pub forms: Vec<Polynomial<F>>,
    /// The original ideal `I` in `S`.
    pub target: Ideal<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftReport {
    pub gb_max_degree: u32,
    pub gb_size: usize,
    /// Hilbert numerators of `A, A/(l_1), A/(l_1, l_2), ...`.
    pub numerators: Vec<TPoly>,
    /// One flag per linear form: killing it multiplies the series by `1-t`.
    pub telescope: Vec<bool>,
    pub recovers_input: bool,
}

impl LiftReport {
    pub fn gb_quadratic(&self) -> bool {
        self.gb_max_degree <= 2
    }

    pub fn telescope_holds(&self) -> bool {
        self.telescope.iter().all(|&b| b)
    }

    pub fn passed(&self) -> bool {
        self.gb_quadratic() && self.telescope_holds() && self.recovers_input
    }

    pub fn to_json(&self) -> Value {
        json!({
            "gb_max_degree": self.gb_max_degree,
            "gb_size": self.gb_size,
            "gb_quadratic": self.gb_quadratic(),
            "numerators": self.numerators.iter().map(|k| k.to_string()).collect::<Vec<_>>(),
            "telescope": self.telescope,
            "recovers_input": self.recovers_input,
            "passed": self.passed(),
        })
    }
}

impl<F: Field> LgCertificate<F> {
    pub fn to_json(&self) -> Value {
        json!({
            "case": format!("{:?}", self.case).to_lowercase(),
            "ring": self.ring.names(),
            "order": order_label(&self.order, &self.ring),
            "lifted": self.lifted.gens().iter().map(|p| format_poly(p, &self.ring)).collect::<Vec<_>>(),
            "forms": self.forms.iter().map(|p| format_poly(p, &self.ring)).collect::<Vec<_>>(),
        })
    }
}

fn order_label(order: &MonomialOrder, ring: &RingDescriptor) -> String {
    match order {
        MonomialOrder::Grevlex => "grevlex".into(),
        MonomialOrder::Lex => "lex".into(),
        MonomialOrder::Block { greater, inner } => {
            let vars: Vec<&str> =
                (0..ring.nvars()).filter(|i| greater & (1 << i) != 0).map(|i| ring.names()[i].as_str()).collect();
            let inner = if *inner == BaseOrder::Lex { ":lex" } else { "" };
            format!("block:{}{inner}", vars.join(","))
        }
    }
}

/// A prefix `p` (a run of `base`'s first letter followed by underscores)
/// such that no `p{suffix}` clashes with `names`.
fn fresh_prefix(base: &str, suffixes: &[String], names: &[String]) -> String {
    let mut p = base.to_string();
    while suffixes.iter().any(|s| names.contains(&format!("{p}{s}"))) {
        p.push('_');
    }
    p
}

/// Embeds a polynomial of `S` into `T`, where the variables of `S` follow
/// `k` new ones.
fn shift<F: Field>(p: &Polynomial<F>, k: usize, nvars: usize, order: MonomialOrder) -> Polynomial<F> {
    let map: Vec<usize> = (k..k + nvars).collect();
    p.map_monomials(order, |m| m.remap(&map))
}

/// Builds the lift of a classified Koszul almost complete intersection.
///
/// One syzygy: `Ĩ = (y_1 z, y_2 z, y_3^2 + q_3, ...)` under a block order with
/// the `y` greater, `J = (y_1 - x, y_2 - w, y_3, ...)`.
///
/// Two syzygies: `Ĩ = I_2(X) + (y_4^2 + q_4, ...)` for a generic 3x2 matrix
/// `X`, under lex with `y_4 > ... > X_12 > X_11 > X_22 > X_21 > X_32 > X_31`
/// above the variables of `S`, and `J = (X_ij - m_ij, y_4, ...)`.
pub fn lg_lift<F: Field>(c: &AciClassification<F>) -> Result<LgCertificate<F>> {
    let s = &c.ring;
    let n = s.nvars();
    let target = c.reassemble().ok_or_else(|| Error::NotAci("no verified structure to lift".into()))?;
    match &c.shape {
        AciShape::OneLinearSyzygy { x, z, w, quadrics, .. } => {
            let k = quadrics.len() + 2;
            let suffixes: Vec<String> = (1..=k).map(|i| i.to_string()).collect();
            let y = fresh_prefix("y", &suffixes, s.names());
            let new: Vec<String> = suffixes.iter().map(|i| format!("{y}{i}")).collect();
            let ring = Arc::new(s.prepend(&new)?);
            let order = MonomialOrder::block(&(0..k).collect::<Vec<_>>(), BaseOrder::Grevlex);
            let up = |p: &Polynomial<F>| shift(p, k, n, order);
            let yv = |i: usize| Polynomial::var(i, order);
            let zt = up(z);
            let mut gens = vec![yv(0).mul_poly(&zt), yv(1).mul_poly(&zt)];
            gens.extend(quadrics.iter().enumerate().map(|(i, q)| yv(i + 2).pow(2).add_poly(&up(q))));
            let mut forms = vec![yv(0).sub_poly(&up(x)), yv(1).sub_poly(&up(w))];
            forms.extend((2..k).map(yv));
            Ok(LgCertificate { case: Case::One, lifted: Ideal::new(ring.clone(), gens)?, ring, order, forms, target })
        }
        AciShape::TwoLinearSyzygies { m, quadrics } => {
            let ky = quadrics.len();
            let ysuf: Vec<String> = (4..4 + ky).map(|i| i.to_string()).collect();
            let xsuf: Vec<String> = ["12", "11", "22", "21", "32", "31"].iter().map(|s| s.to_string()).collect();
            let y = fresh_prefix("y", &ysuf, s.names());
            let xp = fresh_prefix("X", &xsuf, s.names());
            let mut new: Vec<String> = ysuf.iter().map(|i| format!("{y}{i}")).collect();
            new.extend(xsuf.iter().map(|s| format!("{xp}{s}")));
            let k = new.len();
            let ring = Arc::new(s.prepend(&new)?);
            let order = MonomialOrder::Lex;
            let up = |p: &Polynomial<F>| shift(p, k, n, order);
            // X_ij sits at ky + 2(i-1) + (2-j)
            let xv = |i: usize, j: usize| Polynomial::var(ky + 2 * i + (1 - j), order);
            let xm: [[Polynomial<F>; 2]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| xv(i, j)));
            let mut gens = super::minors(&xm).to_vec();
            gens.extend(
                quadrics.iter().enumerate().map(|(s, q)| Polynomial::var(s, order).pow(2).add_poly(&up(q))),
            );
            let mut forms = Vec::new();
            for i in 0..3 {
                for j in (0..2).rev() {
                    forms.push(xv(i, j).sub_poly(&up(&m[i][j])));
                }
            }
            // the y go last: while they remain, y^2 + q has a coprime lead
            forms.extend((0..ky).map(|s| Polynomial::var(s, order)));
            Ok(LgCertificate { case: Case::Two, lifted: Ideal::new(ring.clone(), gens)?, ring, order, forms, target })
        }
        _ => Err(Error::NotAci("no verified structure to lift".into())),
    }
}

/// Kills one linear form: solves for its first variable and drops it.
fn kill<F: Field>(
    ring: &RingDescriptor,
    gens: &[Polynomial<F>],
    rest: &mut [Polynomial<F>],
    form: &Polynomial<F>,
) -> Option<(RingDescriptor, Vec<Polynomial<F>>)> {
    let order = MonomialOrder::Grevlex;
    let n = ring.nvars();
    let v = (0..n).find(|&i| !form.coeff(&Monomial::var(i)).is_zero())?;
    let c = form.coeff(&Monomial::var(v));
    // v = -(form - c v) / c
    let value = form.sub_poly(&Polynomial::term(c.clone(), Monomial::var(v), form.order())).scale(&-c.inv()?);
    let reduce = |p: &Polynomial<F>| p.substitute(v, &value).map_monomials(order, |m| m.drop_var(v));
    for r in rest.iter_mut() {
        *r = reduce(r);
    }
    Some((ring.without(v).ok()?, gens.iter().map(reduce).collect()))
}

/// Checks the certificate: quadratic Gröbner basis of `Ĩ`, the Hilbert series
/// telescope along `J`, and that killing `J` gives back `S/I`.
pub fn check_lift<F: Field>(cert: &LgCertificate<F>) -> LiftReport {
    let gb = buchberger(&cert.lifted, cert.order);
    let mut report = LiftReport {
        gb_max_degree: gb.max_degree(),
        gb_size: gb.len(),
        numerators: Vec::new(),
        telescope: Vec::new(),
        recovers_input: false,
    };
    let mut ring = (*cert.ring).clone();
    let mut gens: Vec<Polynomial<F>> = cert.lifted.gens().iter().map(|g| g.with_order(MonomialOrder::Grevlex)).collect();
    let mut forms: Vec<Polynomial<F>> = cert.forms.iter().map(|f| f.with_order(MonomialOrder::Grevlex)).collect();
    let numerator = |ring: &RingDescriptor, gens: &[Polynomial<F>]| {
        Ideal::new(Arc::new(ring.clone()), gens.to_vec()).ok().map(|i| hilbert_numerator(&i))
    };
    let Some(mut k) = numerator(&ring, &gens) else { return report };
    report.numerators.push(k.clone());
    for i in 0..forms.len() {
        let (head, tail) = forms.split_at_mut(i + 1);
        let Some((r, g)) = kill(&ring, &gens, tail, &head[i]) else {
            report.telescope.push(false);
            return report;
        };
        ring = r;
        gens = g;
        let Some(next) = numerator(&ring, &gens) else {
            report.telescope.push(false);
            return report;
        };
        report.telescope.push(next == k);
        report.numerators.push(next.clone());
        k = next;
    }
    if ring.names() == cert.target.ring().names() {
        if let Ok(i) = Ideal::new(cert.target.ring().clone(), gens) {
            report.recovers_input = ideal_eq(&i, &cert.target.with_order(MonomialOrder::Grevlex));
        }
    }
    report
}

pub fn verify_lift<F: Field>(cert: &LgCertificate<F>) -> bool {
    check_lift(cert).passed()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aci::{classify, generate_family_one, generate_family_two, DEFAULT_RETRY_BUDGET};
    use crate::field::F32003;
    use crate::groebner::initial_ideal;
    use crate::monomial_ideal::MonomialIdeal;

    #[test]
    fn lift_family_one() {
        let i = generate_family_one::<F32003>(2, 4, 3, DEFAULT_RETRY_BUDGET).unwrap();
        let c = classify(&i).unwrap();
        let cert = lg_lift(&c).unwrap();
        let r = check_lift(&cert);
        assert!(r.passed(), "{r:?}");
        // in(I_0) = (in(z) y_1, in(z) y_2, y_3^2)
        let AciShape::OneLinearSyzygy { z, .. } = &c.shape else { panic!() };
        let lz = z.leading_monomial().unwrap().remap(&[3, 4, 5, 6]);
        let expected = MonomialIdeal::new(
            7,
            [Monomial::var(0).mul(&lz), Monomial::var(1).mul(&lz), Monomial::var(2).mul(&Monomial::var(2))],
        );
        assert_eq!(initial_ideal(&cert.lifted, cert.order), expected);
    }

    #[test]
    fn lift_family_two() {
        let i = generate_family_two::<F32003>(3, 5, 0, DEFAULT_RETRY_BUDGET).unwrap();
        let cert = lg_lift(&classify(&i).unwrap()).unwrap();
        assert_eq!(cert.ring.names()[..7], ["y4", "X12", "X11", "X22", "X21", "X32", "X31"]);
        assert!(verify_lift(&cert));
    }

    #[test]
    fn tampered_forms_fail() {
        let i = generate_family_one::<F32003>(2, 4, 5, DEFAULT_RETRY_BUDGET).unwrap();
        let c = classify(&i).unwrap();
        let mut cert = lg_lift(&c).unwrap();
        let AciShape::OneLinearSyzygy { z, .. } = &c.shape else { panic!() };
        cert.forms.push(shift(z, 3, 4, cert.order));
        let r = check_lift(&cert);
        assert!(!r.telescope_holds());
        assert!(!verify_lift(&cert));
    }
}

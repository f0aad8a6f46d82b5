//! Binomial bounds on Betti numbers and the lex-type witnesses for the
//! Hilbert functions of the two Koszul shapes.

use serde_json::{json, Value};

use super::{AciClassification, AciShape, Case};
use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{height, hilbert_numerator, minimal_generators};
use crate::hilbert::binomial;
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::ring::Ideal;

/// Outcome of [`bound_suite`]. Checks that do not apply are `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub mu: usize,
    pub height: i64,
    /// `beta_i <= C(mu, i)` for all `i`.
    pub taylor: bool,
    /// `pd <= mu`.
    pub pd_at_most_mu: bool,
    /// `beta_{i,j} = 0` for `j > 2i`.
    pub subdiagonal: Option<bool>,
    /// `beta_{i,i+1} <= C(mu, i)` and `beta_{i,2i} <= C(mu, i)` for `2 <= i <= mu`.
    pub strands: Option<bool>,
    /// `beta_i >= C(c, i) + C(c-1, i-1)` for `1 <= i <= c`.
    pub beh: Option<bool>,
    /// The monomial witness has the Hilbert function of `S/I`.
    pub egh: Option<bool>,
}

impl BoundReport {
    pub fn all_hold(&self) -> bool {
        self.taylor
            && self.pd_at_most_mu
            && [self.subdiagonal, self.strands, self.beh, self.egh].iter().all(|c| c.unwrap_or(true))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "mu": self.mu,
            "height": self.height,
            "taylor": self.taylor,
            "pd_at_most_mu": self.pd_at_most_mu,
            "subdiagonal": self.subdiagonal,
            "strands": self.strands,
            "beh": self.beh,
            "egh": self.egh,
            "all_hold": self.all_hold(),
        })
    }
}

/// `(x_1^2, ..., x_g^2, x_g x_{g+1})` for one syzygy and
/// `(x_1^2, ..., x_g^2, x_{g-1} x_g)` for two, in `nvars` variables.
pub fn egh_witness(g: usize, nvars: usize, case: Case) -> Result<MonomialIdeal> {
    let (a, b) = match case {
        Case::One => (g.wrapping_sub(1), g),
        Case::Two => (g.wrapping_sub(2), g.wrapping_sub(1)),
    };
    if g == 0 || b >= nvars || a >= b {
        return Err(Error::InvalidArgument(format!("no witness for g = {g} in {nvars} variables")));
    }
    let x = Monomial::var;
    let mut gens: Vec<Monomial> = (0..g).map(|i| x(i).mul(&x(i))).collect();
    gens.push(x(a).mul(&x(b)));
    Ok(MonomialIdeal::new(nvars, gens))
}

/// Checks the binomial upper bounds, and for a classified Koszul almost
/// complete intersection also the strand bounds, the lower bound and the
/// Hilbert function witness. `betti` must be the Betti table of `S/I`.
pub fn bound_suite<F: Field>(ideal: &Ideal<F>, betti: &BettiTable, class: Option<&AciClassification<F>>) -> BoundReport {
    let mu = minimal_generators(ideal).map(|m| m.gens().len()).unwrap_or(0);
    let c = height(ideal);
    let totals = betti.totals();
    let mut report = BoundReport {
        mu,
        height: c,
        taylor: totals.iter().enumerate().all(|(i, &b)| b as i64 <= binomial(mu as i64, i as i64)),
        pd_at_most_mu: betti.pd() <= mu,
        subdiagonal: None,
        strands: None,
        beh: None,
        egh: None,
    };
    let Some(class) = class.filter(|k| k.is_koszul()) else { return report };
    report.subdiagonal = Some(betti.is_subdiagonal());
    report.strands = Some((2..=mu).all(|i| {
        let b = binomial(mu as i64, i as i64) as usize;
        betti.get(i, i as u32 + 1) <= b && betti.get(i, 2 * i as u32) <= b
    }));
    report.beh = Some((1..=c).all(|i| {
        totals.get(i as usize).copied().unwrap_or(0) as i64 >= binomial(c, i) + binomial(c - 1, i - 1)
    }));
    let case = match class.shape {
        AciShape::OneLinearSyzygy { .. } => Some(Case::One),
        AciShape::TwoLinearSyzygies { .. } => Some(Case::Two),
        _ => None,
    };
    if let Some(case) = case {
        report.egh = Some(match egh_witness(class.g, ideal.nvars(), case) {
            Ok(w) => w.hilbert_numerator() == hilbert_numerator(ideal),
            Err(_) => false,
        });
    }
    report
}

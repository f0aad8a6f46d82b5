//! Hilbert series and multiplicity of `S/I`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::krull_dimension;
use crate::resolution::{regular_sections, schreyer_resolution};
use crate::ring::Ideal;
use crate::tpoly::TPoly;

/// `H(t) = K(t) / (1-t)^n = h(t) / (1-t)^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: TPoly,
    pub nvars: usize,
    pub dim: i64,
    pub h: TPoly,
}

impl HilbertSeries {
    /// Reduces `K(t) / (1-t)^n` to lowest terms; `dim` must be the Krull
    /// dimension.
    pub fn from_numerator(numerator: TPoly, nvars: usize, dim: i64) -> Result<Self> {
        if dim < 0 {
            return Ok(HilbertSeries { numerator, nvars, dim, h: TPoly::zero() });
        }
        let mut h = numerator.clone();
        for _ in 0..(nvars as i64 - dim) {
            h = h
                .div_one_minus_t()
                .ok_or_else(|| Error::Internal(format!("Hilbert numerator {numerator} not divisible by (1-t)^{}", nvars as i64 - dim)))?;
        }
        if h.eval_at_one() == 0 {
            return Err(Error::Internal(format!("h-polynomial {h} vanishes at 1; dimension {dim} is too small")));
        }
        Ok(HilbertSeries { numerator, nvars, dim, h })
    }

    pub fn multiplicity(&self) -> i64 {
        self.h.eval_at_one()
    }

    /// `dim_k (S/I)_d`.
    pub fn hilbert_function(&self, d: usize) -> i64 {
        // coefficient of t^d in K(t) * sum_k C(k+n-1, n-1) t^k
        let n = self.nvars as i64;
        (0..=d)
            .map(|i| self.numerator.coeff(i) * binomial(d as i64 - i as i64 + n - 1, n - 1))
            .sum()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dim {
            d if d < 0 => write!(f, "0"),
            0 => write!(f, "{}", self.h),
            1 => write!(f, "({})/(1-t)", self.h),
            d => write!(f, "({})/(1-t)^{d}", self.h),
        }
    }
}

pub(crate) fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Hilbert series of `S/I`, with numerator read off a free resolution (of a
/// regular hyperplane section, which has the same numerator).
pub fn hilbert_series<F: Field>(ideal: &Ideal<F>) -> Result<HilbertSeries> {
    let k = schreyer_resolution(&regular_sections(ideal)).euler_numerator();
    HilbertSeries::from_numerator(k, ideal.nvars(), krull_dimension(ideal))
}

/// `e(S/I) = h(1)`.
pub fn multiplicity<F: Field>(ideal: &Ideal<F>) -> Result<i64> {
    Ok(hilbert_series(ideal)?.multiplicity())
}

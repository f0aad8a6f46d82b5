//! Integer polynomials in one variable `t` (Hilbert numerators).

use std::fmt;

use serde::{Deserialize, Serialize};

/// `sum c_i t^i`, coefficients from degree 0 up, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TPoly(Vec<i64>);

impl TPoly {
    pub fn from_coeffs(mut c: Vec<i64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        TPoly(c)
    }

    pub fn zero() -> Self {
        TPoly(Vec::new())
    }

    pub fn one() -> Self {
        TPoly(vec![1])
    }

    /// `1 - t^d`.
    pub fn one_minus_t_pow(d: u32) -> Self {
        if d == 0 {
            return Self::zero();
        }
        let mut c = vec![0; d as usize + 1];
        c[0] = 1;
        c[d as usize] = -1;
        TPoly(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Adds `c t^d`.
    pub fn add_term(&mut self, d: usize, c: i64) {
        if self.0.len() <= d {
            self.0.resize(d + 1, 0);
        }
        self.0[d] += c;
        *self = Self::from_coeffs(std::mem::take(&mut self.0));
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![0i64; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coeffs(c)
    }

    /// Multiplies by `t^d`.
    pub fn shift(&self, d: u32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![0; d as usize];
        c.extend_from_slice(&self.0);
        TPoly(c)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Exact quotient by `(1 - t)`, or `None` if `t = 1` is not a root.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.eval_at_one() != 0 {
            return None;
        }
        // p = (1 - t) q  =>  q_i = sum_{k <= i} p_k
        let mut q = Vec::with_capacity(self.0.len());
        let mut run = 0;
        for &c in self.0.iter().take(self.0.len().saturating_sub(1)) {
            run += c;
            q.push(run);
        }
        Some(Self::from_coeffs(q))
    }

    /// Largest `k` with `(1 - t)^k` dividing, together with the cofactor.
    pub fn split_one_minus_t(&self) -> (usize, Self) {
        let mut k = 0;
        let mut p = self.clone();
        if p.is_zero() {
            return (0, p);
        }
        while let Some(q) = p.div_one_minus_t() {
            p = q;
            k += 1;
        }
        (k, p)
    }
}

impl fmt::Display for TPoly {
    /// `1+2t-2t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_printing() {
        let p = TPoly::from_coeffs(vec![1, 2, -2, -2, 2]);
        assert_eq!(p.to_string(), "1+2t-2t^2-2t^3+2t^4");
        let q = p.mul(&TPoly::one_minus_t_pow(1)).mul(&TPoly::one_minus_t_pow(1));
        assert_eq!(q.split_one_minus_t(), (2, p.clone()));
        assert_eq!(p.eval_at_one(), 1);
        assert_eq!(TPoly::from_coeffs(vec![0, -1]).to_string(), "-t");
    }
}

//! Ring descriptors and ideals.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{MonomialOrder, MAX_VARS};
use crate::poly::Polynomial;

/// A standard graded polynomial ring `k[x_0, ..., x_{n-1}]`, identified by
/// its variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    names: Vec<String>,
}

impl RingDescriptor {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        Ok(RingDescriptor { names })
    }

    /// Variables `{prefix}1 .. {prefix}n`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Ring with `extra` variables prepended.
    pub fn prepend(&self, extra: &[String]) -> Result<Self> {
        Self::new(extra.iter().cloned().chain(self.names.iter().cloned()))
    }

    /// Ring with variable `i` removed.
    pub fn without(&self, i: usize) -> Result<Self> {
        Self::new(self.names.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, n)| n.clone()))
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(","))
    }
}

/// A homogeneous ideal given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal<F: Field> {
    ring: Arc<RingDescriptor>,
    gens: Vec<Polynomial<F>>,
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; at least one must remain and all must be
    /// homogeneous.
    pub fn new(ring: Arc<RingDescriptor>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        for g in &gens {
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(crate::parse::format_poly(g, &ring)));
            }
            if g.var_span() > ring.nvars() {
                return Err(Error::InvalidRing("generator uses variables outside the ring".into()));
            }
        }
        Ok(Ideal { ring, gens })
    }

    /// The unit ideal.
    pub fn unit(ring: Arc<RingDescriptor>, order: MonomialOrder) -> Self {
        Ideal { ring, gens: vec![Polynomial::constant(F::one(), order)] }
    }

    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Polynomial<F>> {
        self.gens
    }

    /// The order carried by the first generator.
    pub fn order(&self) -> MonomialOrder {
        self.gens[0].order()
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        Ideal { ring: self.ring.clone(), gens: self.gens.iter().map(|g| g.with_order(order)).collect() }
    }

    /// `self + (extra)`.
    pub fn plus(&self, extra: &[Polynomial<F>]) -> Result<Self> {
        let order = self.order();
        Self::new(self.ring.clone(), self.gens.iter().cloned().chain(extra.iter().map(|p| p.with_order(order))).collect())
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == Some(0))
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gs: Vec<String> = self.gens.iter().map(|g| crate::parse::format_poly(g, &self.ring)).collect();
        write!(f, "({})", gs.join(", "))
    }
}

//! Simple graphs up to isomorphism, their edge ideals, polarization, and the
//! catalog of Betti tables and h-polynomials of edge ideals with `g` edges.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::aci::is_quadratic_aci;
use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::HilbertSeries;
use crate::monomial::{Monomial, MonomialOrder};
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::Polynomial;
use crate::resolution::betti_numbers;
use crate::ring::{Ideal, RingDescriptor};
use crate::tpoly::TPoly;

/// Largest edge count [`enumerate_graphs`] accepts.
pub const MAX_EDGES: usize = 6;

/// A simple graph on vertices `0..n` without isolated vertices. Edges are
/// stored as sorted pairs `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut es: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidArgument(format!("bad edge ({u}, {v}) on {n} vertices")));
            }
            es.push((u.min(v), u.max(v)));
        }
        es.sort_unstable();
        if es.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("repeated edge".into()));
        }
        let g = Graph { n, edges: es };
        if (0..n).any(|v| g.degree(v) == 0) {
            return Err(Error::InvalidArgument("isolated vertex".into()));
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Connected components, each relabeled onto `0..k` in vertex order.
    pub fn components(&self) -> Vec<Graph> {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = count;
            while let Some(v) = stack.pop() {
                for &(a, b) in &self.edges {
                    let w = if a == v { b } else if b == v { a } else { continue };
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (0..count)
            .map(|c| {
                let verts: Vec<usize> = (0..self.n).filter(|&v| comp[v] == c).collect();
                let pos = |v: usize| verts.iter().position(|&w| w == v).unwrap();
                let edges = self.edges.iter().filter(|e| comp[e.0] == c).map(|&(a, b)| (pos(a), pos(b)));
                Graph::new(verts.len(), edges).expect("component of a valid graph")
            })
            .collect()
    }

    /// A canonical representative of the isomorphism class: each component
    /// is replaced by its lexicographically least relabeling among those that
    /// list vertices by decreasing degree, and components are sorted.
    pub fn canonical(&self) -> Graph {
        let mut comps: Vec<Graph> = self.components().iter().map(canonical_connected).collect();
        comps.sort();
        let mut edges = Vec::new();
        let mut off = 0;
        for c in &comps {
            edges.extend(c.edges.iter().map(|&(a, b)| (a + off, b + off)));
            off += c.n;
        }
        Graph { n: off, edges }
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.canonical() == other.canonical()
    }

    /// `(x_u x_v : uv an edge)` in `x1..xn`.
    pub fn monomial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.n, self.edges.iter().map(|&(a, b)| Monomial::var(a).mul(&Monomial::var(b))))
    }

    pub fn to_json(&self) -> Value {
        json!(self.edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect::<Vec<_>>())
    }
}

fn canonical_connected(g: &Graph) -> Graph {
    let n = g.n;
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut slots: Vec<usize> = deg.clone();
    slots.sort_unstable_by(|a, b| b.cmp(a));
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut label = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        g: &Graph,
        deg: &[usize],
        slots: &[usize],
        pos: usize,
        label: &mut [usize],
        used: &mut [bool],
        best: &mut Option<Vec<(usize, usize)>>,
    ) {
        if pos == slots.len() {
            let mut es: Vec<(usize, usize)> = g
                .edges
                .iter()
                .map(|&(a, b)| (label[a].min(label[b]), label[a].max(label[b])))
                .collect();
            es.sort_unstable();
            if best.as_ref().map_or(true, |b| es < *b) {
                *best = Some(es);
            }
            return;
        }
        for v in 0..g.n {
            if !used[v] && deg[v] == slots[pos] {
                used[v] = true;
                label[v] = pos;
                rec(g, deg, slots, pos + 1, label, used, best);
                used[v] = false;
            }
        }
    }
    rec(g, &deg, &slots, 0, &mut label, &mut used, &mut best);
    Graph { n, edges: best.unwrap_or_default() }
}

/// One canonical graph per isomorphism class of graphs with `g` edges and no
/// isolated vertices, sorted by vertex count and then edge list.
pub fn enumerate_graphs(g: usize) -> Result<Vec<Graph>> {
    if g == 0 || g > MAX_EDGES {
        return Err(Error::InvalidArgument(format!("edge count {g} outside 1..={MAX_EDGES}")));
    }
    let mut level: BTreeSet<Graph> = BTreeSet::new();
    level.insert(Graph { n: 2, edges: vec![(0, 1)] });
    for _ in 1..g {
        let mut next = BTreeSet::new();
        for gr in &level {
            let n = gr.n;
            let mut cands: Vec<(usize, usize, usize)> = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    cands.push((n, u, v));
                }
                cands.push((n + 1, u, n));
            }
            cands.push((n + 2, n, n + 1));
            for (m, u, v) in cands {
                if gr.edges.binary_search(&(u, v)).is_ok() {
                    continue;
                }
                let mut edges = gr.edges.clone();
                edges.push((u, v));
                edges.sort_unstable();
                next.insert(Graph { n: m, edges }.canonical());
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// The edge ideal of `g` in `x1..xn`, graded reverse lexicographic.
pub fn edge_ideal<F: Field>(g: &Graph) -> Ideal<F> {
    let ring = Arc::new(RingDescriptor::numbered("x", g.n).expect("at most MAX_VARS vertices"));
    let order = MonomialOrder::Grevlex;
    let gens = g
        .edges
        .iter()
        .map(|&(a, b)| Polynomial::term(F::one(), Monomial::var(a).mul(&Monomial::var(b)), order))
        .collect();
    Ideal::new(ring, gens).expect("a graph has edges")
}

/// Polarization of a quadratic monomial ideal: each square `x_i^2` becomes
/// `x_i x_i'` for a new variable `x_i'`, appended after the original ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    /// Pairs `(i, i')`: the linear forms `x_i - x_i'` form a regular sequence
    /// on the polarized quotient and recover the original ideal.
    pub forms: Vec<(usize, usize)>,
}

pub fn polarize(m: &MonomialIdeal) -> Result<Polarization> {
    let n = m.nvars();
    if m.gens().iter().any(|g| g.degree() != 2) {
        return Err(Error::InvalidArgument("polarization expects a quadratic monomial ideal".into()));
    }
    let mut forms = Vec::new();
    let mut gens = Vec::new();
    for g in m.gens() {
        match (0..n).find(|&i| g.exp(i) == 2) {
            Some(i) => {
                let j = n + forms.len();
                forms.push((i, j));
                gens.push(Monomial::var(i).mul(&Monomial::var(j)));
            }
            None => gens.push(*g),
        }
    }
    Ok(Polarization { ideal: MonomialIdeal::new(n + forms.len(), gens), forms })
}

impl Polarization {
    /// Substitutes `x_i' -> x_i`, giving back the original ideal.
    pub fn depolarize(&self) -> MonomialIdeal {
        let n = self.ideal.nvars() - self.forms.len();
        let gens = self.ideal.gens().iter().map(|g| {
            let mut e: Vec<u16> = g.exponents(self.ideal.nvars()).to_vec();
            for &(i, j) in &self.forms {
                e[i] += e[j];
            }
            Monomial::from_exponents(&e[..n])
        });
        MonomialIdeal::new(n, gens)
    }
}

/// The ideal of a monomial ideal over `F`, in `x1..xn`.
pub fn monomial_ideal_to_ideal<F: Field>(m: &MonomialIdeal) -> Result<Ideal<F>> {
    let ring = Arc::new(RingDescriptor::numbered("x", m.nvars())?);
    let gens = m.gens().iter().map(|g| Polynomial::term(F::one(), *g, MonomialOrder::Grevlex)).collect();
    Ideal::new(ring, gens)
}

/// One row of a [`Catalog`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub graph: Graph,
    pub betti: BettiTable,
    pub hilbert: HilbertSeries,
    pub aci: bool,
}

impl CatalogEntry {
    pub fn h_polynomial(&self) -> &TPoly {
        &self.hilbert.h
    }

    pub fn to_json(&self) -> Value {
        json!({
            "graph": self.graph.to_json(),
            "betti": self.betti.to_json(),
            "hpoly": self.hilbert.h.coeffs(),
            "aci": self.aci,
        })
    }
}

/// Betti tables and h-polynomials of all edge ideals with `g` generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub g: usize,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Distinct h-polynomials, each with the index of its first entry.
    pub fn h_polynomials(&self) -> BTreeMap<Vec<i64>, usize> {
        let mut out = BTreeMap::new();
        for (k, e) in self.entries.iter().enumerate() {
            out.entry(e.hilbert.h.coeffs().to_vec()).or_insert(k);
        }
        out
    }

    pub fn contains_h_polynomial(&self, h: &TPoly) -> bool {
        self.entries.iter().any(|e| &e.hilbert.h == h)
    }

    /// Distinct Betti tables among almost complete intersection entries.
    pub fn aci_tables(&self) -> BTreeSet<Vec<((usize, u32), usize)>> {
        self.entries
            .iter()
            .filter(|e| e.aci)
            .map(|e| e.betti.entries().iter().map(|(&k, &v)| (k, v)).collect())
            .collect()
    }

    /// JSON lines, one per graph.
    pub fn to_json_lines(&self) -> String {
        self.entries.iter().map(|e| e.to_json().to_string() + "\n").collect()
    }
}

pub fn build_catalog<F: Field>(g: usize) -> Result<Catalog> {
    let mut entries = Vec::new();
    for graph in enumerate_graphs(g)? {
        let m = graph.monomial_ideal();
        let ideal = edge_ideal::<F>(&graph);
        let hilbert = HilbertSeries::from_numerator(m.hilbert_numerator(), m.nvars(), m.dimension())?;
        entries.push(CatalogEntry { betti: betti_numbers(&ideal), aci: is_quadratic_aci(&ideal), hilbert, graph });
    }
    Ok(Catalog { g, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::F32003;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=4).map(|g| enumerate_graphs(g).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 11]);
        assert!(enumerate_graphs(7).is_err());
    }

    #[test]
    fn canonical_forms_identify_relabelings() {
        let p3a = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let p3b = Graph::new(3, [(0, 2), (2, 1)]).unwrap();
        assert!(p3a.is_isomorphic(&p3b));
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!p3a.is_isomorphic(&two));
        assert!(Graph::new(3, [(0, 1)]).is_err());
    }

    #[test]
    fn path_has_one_linear_syzygy() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let b = betti_numbers(&edge_ideal::<F32003>(&p3));
        assert_eq!(b.get(2, 3), 1);
    }

    #[test]
    fn polarization_examples() {
        let x = Monomial::var;
        let sq = MonomialIdeal::new(1, [x(0).mul(&x(0))]);
        let p = polarize(&sq).unwrap();
        assert_eq!(p.forms, vec![(0, 1)]);
        assert_eq!(p.ideal.gens(), &[x(0).mul(&x(1))]);
        assert_eq!(p.depolarize(), sq);
        let free = MonomialIdeal::new(2, [x(0).mul(&x(1))]);
        assert_eq!(polarize(&free).unwrap().ideal, free);
        assert!(polarize(&MonomialIdeal::new(1, [x(0)])).is_err());
    }
}

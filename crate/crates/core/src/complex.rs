//! Graded free complexes `... -> F_2 -> F_1 -> F_0` and the standard
//! constructions on them.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::monomial::{Monomial, MonomialOrder};
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::Polynomial;
use crate::ring::RingDescriptor;
use crate::tpoly::TPoly;

/// A free module `sum S(-d_k)`, given by its generator degrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedFreeModule {
    degrees: Vec<u32>,
}

impl GradedFreeModule {
    pub fn new(degrees: Vec<u32>) -> Self {
        GradedFreeModule { degrees }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }
}

/// A matrix of polynomials, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<F: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn zeros(rows: usize, cols: usize, order: MonomialOrder) -> Self {
        PolyMatrix { rows, cols, entries: vec![vec![Polynomial::zero(order); cols]; rows] }
    }

    pub fn from_columns(rows: usize, columns: Vec<Vec<Polynomial<F>>>, order: MonomialOrder) -> Self {
        let mut m = Self::zeros(rows, columns.len(), order);
        for (c, col) in columns.into_iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, p) in col.into_iter().enumerate() {
                m.entries[r][c] = p;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial<F> {
        &self.entries[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial<F>) {
        self.entries[r][c] = p;
    }

    pub fn column(&self, c: usize) -> Vec<Polynomial<F>> {
        self.entries.iter().map(|row| row[c].clone()).collect()
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        let order = self.entries.first().and_then(|r| r.first()).map(|p| p.order()).unwrap_or_default();
        let mut out = Self::zeros(self.rows, o.cols, order);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.entries[k][j];
                    if !b.is_zero() {
                        out.entries[i][j] = out.entries[i][j].add_poly(&a.mul_poly(b));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(|p| p.is_zero()))
    }

    fn remove_row(&mut self, r: usize) {
        self.entries.remove(r);
        self.rows -= 1;
    }

    fn remove_col(&mut self, c: usize) {
        for row in &mut self.entries {
            row.remove(c);
        }
        self.cols -= 1;
    }
}

/// A complex of graded free modules. `maps[i]` is the differential
/// `F_{i+1} -> F_i`, with `rank F_i` rows and `rank F_{i+1}` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComplex<F: Field> {
    ring: Arc<RingDescriptor>,
    order: MonomialOrder,
    modules: Vec<GradedFreeModule>,
    maps: Vec<PolyMatrix<F>>,
}

impl<F: Field> GradedComplex<F> {
    pub fn new(
        ring: Arc<RingDescriptor>,
        order: MonomialOrder,
        modules: Vec<GradedFreeModule>,
        maps: Vec<PolyMatrix<F>>,
    ) -> Result<Self> {
        if modules.is_empty() || maps.len() + 1 != modules.len() {
            return Err(Error::InvalidArgument("complex needs one map between consecutive modules".into()));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.rows() != modules[i].rank() || m.cols() != modules[i + 1].rank() {
                return Err(Error::InvalidArgument(format!("differential {} has the wrong shape", i + 1)));
            }
        }
        let mut c = GradedComplex { ring, order, modules, maps };
        c.trim();
        Ok(c)
    }

    /// The complex `0 -> S -> 0` concentrated in degree zero.
    pub fn ring_itself(ring: Arc<RingDescriptor>, order: MonomialOrder) -> Self {
        GradedComplex { ring, order, modules: vec![GradedFreeModule::new(vec![0])], maps: Vec::new() }
    }

    fn trim(&mut self) {
        while self.modules.len() > 1 && self.modules.last().unwrap().rank() == 0 {
            self.modules.pop();
            self.maps.pop();
        }
    }

    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Index of the last nonzero module.
    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn module(&self, i: usize) -> &GradedFreeModule {
        &self.modules[i]
    }

    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }

    pub fn rank(&self, i: usize) -> usize {
        self.modules.get(i).map_or(0, |m| m.rank())
    }

    /// `d_i : F_i -> F_{i-1}` for `1 <= i <= length`.
    pub fn differential(&self, i: usize) -> &PolyMatrix<F> {
        &self.maps[i - 1]
    }

    /// `d_{i-1} d_i = 0` for all `i`.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }

    /// Every nonzero entry of `d_i` in row `r`, column `c` is homogeneous of
    /// degree `deg F_i[c] - deg F_{i-1}[r]`.
    pub fn is_graded(&self) -> bool {
        self.maps.iter().enumerate().all(|(i, m)| {
            let (src, dst) = (&self.modules[i + 1], &self.modules[i]);
            (0..m.rows()).all(|r| {
                (0..m.cols()).all(|c| {
                    let p = m.get(r, c);
                    p.is_zero()
                        || (p.is_homogeneous() && src.degrees[c] >= dst.degrees[r] && p.degree() == Some(src.degrees[c] - dst.degrees[r]))
                })
            })
        })
    }

    /// No differential has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.find_unit().is_none()
    }

    fn find_unit(&self) -> Option<(usize, usize, usize)> {
        for (i, m) in self.maps.iter().enumerate() {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    if m.get(r, c).degree() == Some(0) {
                        return Some((i + 1, r, c));
                    }
                }
            }
        }
        None
    }

    /// Cancels unit entries one at a time until none remain.
    ///
    /// For a unit `u` at row `r`, column `c` of `d_i`:
    /// `d_i <- d_i - d_i[., c] u^-1 d_i[r, .]` with row `r` and column `c`
    /// deleted, row `c` of `d_{i+1}` deleted and column `r` of `d_{i-1}`
    /// deleted.
    pub fn minimize(&self) -> Self {
        let mut out = self.clone();
        while let Some((i, r, c)) = out.find_unit() {
            let d = &out.maps[i - 1];
            let u_inv = d.get(r, c).leading_coeff().unwrap().inv().unwrap();
            let col = d.column(c);
            let row: Vec<Polynomial<F>> = (0..d.cols()).map(|k| d.get(r, k).clone()).collect();
            let mut nd = d.clone();
            for (s, a) in col.iter().enumerate() {
                if s == r || a.is_zero() {
                    continue;
                }
                let a = a.scale(&u_inv);
                for (k, b) in row.iter().enumerate() {
                    if k == c || b.is_zero() {
                        continue;
                    }
                    let v = nd.get(s, k).sub_poly(&a.mul_poly(b));
                    nd.set(s, k, v);
                }
            }
            nd.remove_row(r);
            nd.remove_col(c);
            out.maps[i - 1] = nd;
            if i < out.maps.len() {
                out.maps[i].remove_row(c);
            }
            if i >= 2 {
                out.maps[i - 2].remove_col(r);
            }
            out.modules[i].degrees.remove(c);
            out.modules[i - 1].degrees.remove(r);
        }
        out.trim();
        out
    }

    /// Betti table of a minimal complex.
    pub fn betti_table(&self) -> Result<BettiTable> {
        if !self.is_minimal() {
            return Err(Error::NotMinimal);
        }
        Ok(self.degree_table())
    }

    /// Graded Betti numbers of the module resolved, for any (not necessarily
    /// minimal) free resolution: `beta_{i,j}` is the homology of the complex
    /// tensored with the residue field, whose differentials are the constant
    /// entries between generators of equal degree.
    pub fn tor_table(&self) -> BettiTable {
        // ranks[i][d]: rank of the degree-d constant block of maps[i]
        let mut ranks: Vec<BTreeMap<u32, usize>> = vec![BTreeMap::new(); self.maps.len() + 1];
        for (i, m) in self.maps.iter().enumerate() {
            let src = &self.modules[i + 1].degrees;
            let dst = &self.modules[i].degrees;
            let mut degs: Vec<u32> = src.clone();
            degs.sort_unstable();
            degs.dedup();
            for d in degs {
                let rows: Vec<usize> = (0..dst.len()).filter(|&r| dst[r] == d).collect();
                let cols: Vec<usize> = (0..src.len()).filter(|&c| src[c] == d).collect();
                if rows.is_empty() {
                    continue;
                }
                let block: Vec<Vec<F>> = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| m.get(r, c).coeff(&Monomial::one())).collect())
                    .collect();
                let rank = Matrix::from_rows(block, cols.len()).rank();
                if rank > 0 {
                    ranks[i].insert(d, rank);
                }
            }
        }
        let mut t = BettiTable::new();
        for (i, m) in self.modules.iter().enumerate() {
            let mut count: BTreeMap<u32, usize> = BTreeMap::new();
            for &d in &m.degrees {
                *count.entry(d).or_insert(0) += 1;
            }
            for (d, c) in count {
                let out = if i > 0 { ranks[i - 1].get(&d).copied().unwrap_or(0) } else { 0 };
                let inc = ranks[i].get(&d).copied().unwrap_or(0);
                t.add(i, d, c - out - inc);
            }
        }
        t
    }

    /// Generator degrees per homological index, with no minimality check.
    pub fn degree_table(&self) -> BettiTable {
        let mut t = BettiTable::new();
        for (i, m) in self.modules.iter().enumerate() {
            for &d in &m.degrees {
                t.add(i, d, 1);
            }
        }
        t
    }

    /// `sum (-1)^i t^{deg}` over all generators; the Hilbert series numerator
    /// of the module resolved.
    pub fn euler_numerator(&self) -> TPoly {
        self.degree_table().hilbert_numerator()
    }
}

/// The mapping cone of multiplication by `q` on `F`, i.e. `F ⊗ K(q)`:
/// `G_k = F_k ⊕ F_{k-1}(-deg q)` with differential
/// `[[d_k, (-1)^(k-1) q], [0, d_{k-1}]]`.
fn cone<F: Field>(f: &GradedComplex<F>, q: &Polynomial<F>) -> GradedComplex<F> {
    let order = f.order;
    let dq = q.degree().unwrap_or(0);
    let q = q.with_order(order);
    let len = f.length() + 1;
    let mut modules = Vec::with_capacity(len + 1);
    for k in 0..=len {
        let mut deg = if k <= f.length() { f.modules[k].degrees.clone() } else { Vec::new() };
        if k >= 1 {
            deg.extend(f.modules[k - 1].degrees.iter().map(|d| d + dq));
        }
        modules.push(GradedFreeModule::new(deg));
    }
    let mut maps = Vec::with_capacity(len);
    for k in 1..=len {
        let (a, b) = (f.rank(k), f.rank(k - 1));
        let (a2, b2) = (f.rank(k - 1), if k >= 2 { f.rank(k - 2) } else { 0 });
        let mut m = PolyMatrix::zeros(b + b2, a + a2, order);
        if k <= f.length() {
            let d = f.differential(k);
            for r in 0..b {
                for c in 0..a {
                    m.set(r, c, d.get(r, c).clone());
                }
            }
        }
        let sq = if k % 2 == 1 { q.clone() } else { -&q };
        for j in 0..a2 {
            m.set(j, a + j, sq.clone());
        }
        if k >= 2 {
            let d = f.differential(k - 1);
            for r in 0..b2 {
                for c in 0..a2 {
                    m.set(b + r, a + c, d.get(r, c).clone());
                }
            }
        }
        maps.push(m);
    }
    let mut out = GradedComplex { ring: f.ring.clone(), order, modules, maps };
    out.trim();
    out
}

/// `F ⊗ K(q_1, ..., q_m)` as iterated mapping cones.
pub fn tensor_with_koszul<F: Field>(f: &GradedComplex<F>, qs: &[Polynomial<F>]) -> GradedComplex<F> {
    qs.iter().fold(f.clone(), |acc, q| cone(&acc, q))
}

/// The Koszul complex on `fs`.
pub fn koszul_complex<F: Field>(ring: Arc<RingDescriptor>, order: MonomialOrder, fs: &[Polynomial<F>]) -> GradedComplex<F> {
    tensor_with_koszul(&GradedComplex::ring_itself(ring, order), fs)
}

/// The Taylor complex of the generators of `m`: one basis element per subset,
/// of degree the degree of the subset's lcm.
pub fn taylor_complex<F: Field>(m: &MonomialIdeal, ring: Arc<RingDescriptor>, order: MonomialOrder) -> GradedComplex<F> {
    let gens = m.gens();
    let g = gens.len();
    assert!(g < 25, "Taylor complex on more than 24 generators");
    let lcm = |mask: u32| {
        (0..g).filter(|k| mask >> k & 1 == 1).fold(Monomial::one(), |acc, k| acc.lcm(&gens[k]))
    };
    let mut subsets: Vec<Vec<u32>> = vec![Vec::new(); g + 1];
    for mask in 0u32..(1u32 << g) {
        subsets[mask.count_ones() as usize].push(mask);
    }
    let modules: Vec<GradedFreeModule> = subsets
        .iter()
        .map(|s| GradedFreeModule::new(s.iter().map(|&x| lcm(x).degree()).collect()))
        .collect();
    let mut maps = Vec::with_capacity(g);
    for k in 1..=g {
        let pos: std::collections::HashMap<u32, usize> = subsets[k - 1].iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut mat = PolyMatrix::zeros(subsets[k - 1].len(), subsets[k].len(), order);
        for (c, &s) in subsets[k].iter().enumerate() {
            let ls = lcm(s);
            for (t, j) in (0..g).filter(|j| s >> j & 1 == 1).enumerate() {
                let face = s & !(1 << j);
                let coeff = if t % 2 == 0 { F::one() } else { -F::one() };
                let mono = lcm(face).quotient_of(&ls).unwrap();
                mat.set(pos[&face], c, Polynomial::term(coeff, mono, order));
            }
        }
        maps.push(mat);
    }
    let mut out = GradedComplex { ring, order, modules, maps };
    out.trim();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::F32003;
    use crate::parse::parse_poly;

    type F = F32003;
    const O: MonomialOrder = MonomialOrder::Grevlex;

    fn setup(names: &[&str]) -> Arc<RingDescriptor> {
        Arc::new(RingDescriptor::new(names.iter().copied()).unwrap())
    }

    fn p(s: &str, r: &RingDescriptor) -> Polynomial<F> {
        parse_poly(s, r, O).unwrap()
    }

    #[test]
    fn koszul_on_two_quadrics() {
        let r = setup(&["x", "y", "z"]);
        let k = koszul_complex(r.clone(), O, &[p("x^2", &r), p("y^2+z^2", &r)]);
        assert!(k.is_complex() && k.is_graded() && k.is_minimal());
        let t = k.betti_table().unwrap();
        assert_eq!(t, BettiTable::from_entries([((0, 0), 1), ((1, 2), 2), ((2, 4), 1)]));
        assert_eq!(tensor_with_koszul(&k, &[]), k);
    }

    #[test]
    fn koszul_ranks_are_binomial() {
        let r = setup(&["a", "b", "c", "d"]);
        let fs: Vec<_> = ["a^2", "b^2", "c^2", "d^2"].iter().map(|s| p(s, &r)).collect();
        let k = koszul_complex(r, O, &fs);
        assert!(k.is_complex());
        let t = k.betti_table().unwrap();
        for (i, c) in [1, 4, 6, 4, 1].into_iter().enumerate() {
            assert_eq!(t.get(i, 2 * i as u32), c);
        }
    }

    #[test]
    fn taylor_of_a_path_minimizes() {
        let r = setup(&["x", "y", "z", "w"]);
        let m = MonomialIdeal::new(
            4,
            ["x*y", "y*z", "z*w"].iter().map(|s| p(s, &r).leading_monomial().unwrap()),
        );
        let t: GradedComplex<F> = taylor_complex(&m, r.clone(), O);
        assert!(t.is_complex() && t.is_graded());
        assert_eq!(t.rank(2), 3);
        assert!(!t.is_minimal());
        assert_eq!(t.betti_table(), Err(Error::NotMinimal));
        let min = t.minimize();
        assert!(min.is_complex() && min.is_minimal());
        assert_eq!(min.rank(2), 2);
        assert_eq!(min.euler_numerator(), t.euler_numerator());
        let two = MonomialIdeal::new(4, ["x*y", "y*z"].iter().map(|s| p(s, &r).leading_monomial().unwrap()));
        let t2: GradedComplex<F> = taylor_complex(&two, r, O);
        assert_eq!(t2.betti_table().unwrap(), BettiTable::from_entries([((0, 0), 1), ((1, 2), 2), ((2, 3), 1)]));
    }
}

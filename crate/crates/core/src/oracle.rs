//! Independent brute-force checks: degreewise linear algebra for Tor and
//! colon ideals, and graph counts by Burnside's lemma and by exhaustive
//! relabeling. None of these use Gröbner bases or resolutions.

use std::collections::{BTreeSet, HashMap};

use crate::betti::BettiTable;
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ideal;

/// Row echelon form over sparse rows; a row's first entry is its pivot.
struct SparseEchelon<F: Field> {
    dim: usize,
    pivots: Vec<Option<Vec<(usize, F)>>>,
    rank: usize,
}

impl<F: Field> SparseEchelon<F> {
    fn new(dim: usize) -> Self {
        SparseEchelon { dim, pivots: vec![None; dim], rank: 0 }
    }

    /// Remainder of `v` with zeros in every pivot column.
    fn reduce(&self, v: &[(usize, F)]) -> Vec<(usize, F)> {
        let mut acc = vec![F::zero(); self.dim];
        let mut lo = self.dim;
        for (c, a) in v {
            acc[*c] = acc[*c].clone() + a.clone();
            lo = lo.min(*c);
        }
        let mut out = Vec::new();
        for c in lo..self.dim {
            if acc[c].is_zero() {
                continue;
            }
            match &self.pivots[c] {
                Some(row) => {
                    let f = acc[c].clone();
                    for (k, b) in row {
                        acc[*k] = acc[*k].clone() - f.clone() * b.clone();
                    }
                }
                None => out.push((c, acc[c].clone())),
            }
        }
        out
    }

    fn insert(&mut self, v: &[(usize, F)]) -> bool {
        let r = self.reduce(v);
        let Some((p, lead)) = r.first().cloned() else { return false };
        let inv = lead.inv().unwrap();
        self.pivots[p] = Some(r.into_iter().map(|(c, a)| (c, a * inv.clone())).collect());
        self.rank += 1;
        true
    }
}

/// `S_d / I_d` for one degree: the monomials of `S_d`, the echelon form of
/// `I_d`, and coordinates on the non-pivot monomials.
struct DegreePart<F: Field> {
    index: HashMap<Monomial, usize>,
    ideal: SparseEchelon<F>,
    /// Quotient basis monomials and their column in `S_d`.
    quotient: Vec<Monomial>,
    qpos: HashMap<usize, usize>,
}

impl<F: Field> DegreePart<F> {
    fn new(gens: &[Polynomial<F>], n: usize, d: u32) -> Self {
        let basis = Monomial::all_of_degree(n, d);
        let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut ideal = SparseEchelon::new(basis.len());
        for g in gens {
            let Some(e) = g.degree() else { continue };
            if e > d {
                continue;
            }
            for m in Monomial::all_of_degree(n, d - e) {
                let row: Vec<(usize, F)> = g.terms().iter().map(|(t, c)| (index[&t.mul(&m)], c.clone())).collect();
                ideal.insert(&row);
                if ideal.rank == basis.len() {
                    break;
                }
            }
        }
        let quotient: Vec<Monomial> =
            basis.iter().enumerate().filter(|(i, _)| ideal.pivots[*i].is_none()).map(|(_, m)| *m).collect();
        let qpos = quotient.iter().enumerate().map(|(q, m)| (index[m], q)).collect();
        DegreePart { index, ideal, quotient, qpos }
    }

    /// Coordinates in `S_d / I_d` of a polynomial of degree `d`.
    fn normal_form(&self, terms: &[(Monomial, F)]) -> Vec<(usize, F)> {
        let v: Vec<(usize, F)> = terms.iter().map(|(m, c)| (self.index[m], c.clone())).collect();
        self.ideal.reduce(&v).into_iter().map(|(c, a)| (self.qpos[&c], a)).collect()
    }
}

/// `beta_{i,j}` of `S/I` for `j <= max_degree`, as the homology of the
/// Koszul complex on the variables tensored with `S/I`, degree by degree.
pub fn tor_by_koszul_homology<F: Field>(ideal: &Ideal<F>, max_degree: u32) -> BettiTable {
    let n = ideal.nvars();
    let gens = ideal.gens();
    let parts: Vec<DegreePart<F>> = (0..=max_degree).map(|d| DegreePart::new(gens, n, d)).collect();
    // subsets of the variables by size, as bitmasks
    let mut subsets: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for s in 0u32..(1 << n) {
        subsets[s.count_ones() as usize].push(s);
    }
    let sub_index: Vec<HashMap<u32, usize>> =
        subsets.iter().map(|v| v.iter().enumerate().map(|(k, &s)| (s, k)).collect()).collect();
    // rank of d_i : K_{i,j} -> K_{i-1,j}
    let rank = |i: usize, j: u32| -> usize {
        if i == 0 || i > n || (i as u32) > j {
            return 0;
        }
        let src = &parts[(j - i as u32) as usize];
        let dst = &parts[(j - i as u32 + 1) as usize];
        let dq = dst.quotient.len();
        let mut ech = SparseEchelon::new(subsets[i - 1].len() * dq);
        for &s in &subsets[i] {
            for m in &src.quotient {
                let mut v: Vec<(usize, F)> = Vec::new();
                let mut sign = F::one();
                for a in 0..n {
                    if s & (1 << a) == 0 {
                        continue;
                    }
                    let t = sub_index[i - 1][&(s & !(1 << a))];
                    let nf = dst.normal_form(&[(m.mul(&Monomial::var(a)), F::one())]);
                    v.extend(nf.into_iter().map(|(q, c)| (t * dq + q, c * sign.clone())));
                    sign = -sign;
                }
                ech.insert(&v);
            }
        }
        ech.rank
    };
    let mut t = BettiTable::new();
    for j in 0..=max_degree {
        for i in 0..=n.min(j as usize) {
            let dim = subsets[i].len() * parts[(j - i as u32) as usize].quotient.len();
            let r_out = rank(i, j);
            let r_in = if j >= 1 { rank(i + 1, j) } else { 0 };
            t.add(i, j, dim - r_out - r_in);
        }
    }
    t
}

/// `dim_k I_d`, by spanning the multiples of the generators.
pub fn ideal_dimension_in_degree<F: Field>(ideal: &Ideal<F>, d: u32) -> usize {
    DegreePart::new(ideal.gens(), ideal.nvars(), d).ideal.rank
}

/// `dim_k (I : f)_d`: the kernel of multiplication by `f` from `S_d` to
/// `(S/I)_{d + deg f}`.
pub fn colon_dimension_in_degree<F: Field>(ideal: &Ideal<F>, f: &Polynomial<F>, d: u32) -> usize {
    let n = ideal.nvars();
    let e = f.degree().unwrap_or(0);
    let target = DegreePart::new(ideal.gens(), n, d + e);
    let source = Monomial::all_of_degree(n, d);
    let mut ech = SparseEchelon::new(target.quotient.len());
    for m in &source {
        let terms: Vec<(Monomial, F)> = f.terms().iter().map(|(t, c)| (t.mul(m), c.clone())).collect();
        ech.insert(&target.normal_form(&terms));
    }
    source.len() - ech.rank
}

/// Number of isomorphism classes of graphs with `e` edges on `v` vertices
/// (isolated vertices allowed), by Burnside's lemma over cycle types.
pub fn burnside_graph_count(v: usize, e: usize) -> u128 {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    fn partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            partitions(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut parts = Vec::new();
    partitions(v, v, &mut Vec::new(), &mut parts);
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let mut total: u128 = 0;
    for p in parts {
        // cycle lengths of the induced permutation on vertex pairs
        let mut cycles: Vec<usize> = Vec::new();
        for (i, &a) in p.iter().enumerate() {
            cycles.extend(std::iter::repeat(a).take((a - 1) / 2));
            if a % 2 == 0 {
                cycles.push(a / 2);
            }
            for &b in &p[i + 1..] {
                let g = gcd(a, b);
                cycles.extend(std::iter::repeat(a / g * b).take(g));
            }
        }
        // fixed edge sets of size e: coefficient of x^e in prod (1 + x^len)
        let mut poly = vec![0u128; e + 1];
        poly[0] = 1;
        for c in cycles {
            for k in (c..=e).rev() {
                poly[k] += poly[k - c];
            }
        }
        // permutations of this cycle type: v! / prod(a^m_a m_a!)
        let mut z: u128 = 1;
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &a in &p {
            *counts.entry(a).or_insert(0) += 1;
        }
        for (a, m) in counts {
            z *= (a as u128).pow(m as u32) * fact(m);
        }
        total += poly[e] * (fact(v) / z);
    }
    total / fact(v)
}

/// Number of isomorphism classes of graphs with `g` edges and no isolated
/// vertex, by listing every labeled graph on `2g` vertices and taking the
/// least relabeling under all permutations. Exponential; for `g <= 3`.
pub fn labeled_graph_classes(g: usize) -> usize {
    let v = 2 * g;
    let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut p: Vec<usize> = (0..v).collect();
    permute(&mut p, 0, &mut perms);
    let mut classes: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    let mut choice: Vec<usize> = Vec::new();
    fn subsets(k: usize, start: usize, m: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..m {
            cur.push(i);
            subsets(k, i + 1, m, cur, f);
            cur.pop();
        }
    }
    subsets(g, 0, pairs.len(), &mut choice, &mut |sel| {
        let best = perms
            .iter()
            .map(|p| {
                let mut es: Vec<(usize, usize)> = sel
                    .iter()
                    .map(|&k| {
                        let (a, b) = pairs[k];
                        (p[a].min(p[b]), p[a].max(p[b]))
                    })
                    .collect();
                es.sort_unstable();
                es
            })
            .min()
            .unwrap();
        classes.insert(best);
    });
    classes.len()
}

fn permute(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == p.len() {
        out.push(p.clone());
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, out);
        p.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::F32003;
    use crate::monomial::MonomialOrder;
    use crate::parse::{parse_ideal_file, parse_poly};

    fn ideal(src: &str) -> Ideal<F32003> {
        parse_ideal_file::<F32003>(src, MonomialOrder::Grevlex).unwrap().ideal().unwrap()
    }

    #[test]
    fn graph_counts() {
        // graphs with g edges and no isolated vertex: 1, 2, 5, 11, 26, 68
        let counts: Vec<u128> = (1..=6).map(|g| burnside_graph_count(2 * g, g)).collect();
        assert_eq!(counts, vec![1, 2, 5, 11, 26, 68]);
        assert_eq!(labeled_graph_classes(2), 2);
        assert_eq!(labeled_graph_classes(3), 5);
    }

    #[test]
    fn koszul_homology_of_two_monomials() {
        let t = tor_by_koszul_homology(&ideal("ring Fp[x,z,w]; ideal (x*z, z*w);"), 6);
        assert_eq!(t, BettiTable::from_entries([((0, 0), 1), ((1, 2), 2), ((2, 3), 1)]));
    }

    #[test]
    fn colon_dimensions() {
        let i = ideal("ring Fp[x,y,z,w]; ideal (x*y, x*w, z^2);");
        let f = parse_poly::<F32003>("(x-y)*z", i.ring(), MonomialOrder::Grevlex).unwrap();
        // (I : f) = (xy, xw, z): in degree 1 only z
        assert_eq!(colon_dimension_in_degree(&i, &f, 0), 0);
        assert_eq!(colon_dimension_in_degree(&i, &f, 1), 1);
        let c = ideal("ring Fp[x,y,z,w]; ideal (x*y, x*w, z);");
        assert_eq!(colon_dimension_in_degree(&i, &f, 2), ideal_dimension_in_degree(&c, 2));
    }
}

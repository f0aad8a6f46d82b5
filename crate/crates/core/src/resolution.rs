//! Syzygies and minimal free resolutions via Schreyer frames.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::betti::BettiTable;
use crate::complex::{GradedComplex, GradedFreeModule, PolyMatrix};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::hilbert_numerator;
use crate::module::{self, divide, LeadIndex, ModTerm, ModVec, ModuleOrder};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::Ideal;

/// Minimal generators of the kernel of a map of graded free modules
/// `S^k -> F`, given by its columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyModule<F: Field> {
    /// The source `S^k`, graded so that the map has degree zero.
    pub ambient: GradedFreeModule,
    /// Generators, as vectors of length `k`.
    pub columns: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> SyzygyModule<F> {
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Degree of each generator.
    pub fn degrees(&self) -> Vec<u32> {
        self.columns
            .iter()
            .map(|c| {
                let (i, p) = c.iter().enumerate().find(|(_, p)| !p.is_zero()).unwrap();
                p.degree().unwrap() + self.ambient.degrees()[i]
            })
            .collect()
    }
}

fn column_degree<F: Field>(col: &[Polynomial<F>], target: &GradedFreeModule) -> Result<u32> {
    let mut deg = None;
    for (i, p) in col.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        if !p.is_homogeneous() {
            return Err(Error::InvalidArgument("inhomogeneous column entry".into()));
        }
        let d = p.degree().unwrap() + target.degrees()[i];
        match deg {
            None => deg = Some(d),
            Some(e) if e != d => return Err(Error::InvalidArgument("column is not homogeneous".into())),
            _ => {}
        }
    }
    deg.ok_or_else(|| Error::InvalidArgument("zero column".into()))
}

/// Minimal generators of the syzygies on `columns`, vectors in the graded
/// free module `target`.
pub fn syzygies<F: Field>(
    target: &GradedFreeModule,
    columns: &[Vec<Polynomial<F>>],
    nvars: usize,
    order: MonomialOrder,
) -> Result<SyzygyModule<F>> {
    let ord = ModuleOrder::top(order, target.degrees().to_vec());
    let mut degrees = Vec::with_capacity(columns.len());
    let mut cols = Vec::with_capacity(columns.len());
    for c in columns {
        if c.len() != target.rank() {
            return Err(Error::InvalidArgument("column length differs from the target rank".into()));
        }
        degrees.push(column_degree(c, target)?);
        let c: Vec<Polynomial<F>> = c.iter().map(|p| p.with_order(order)).collect();
        cols.push(ModVec::from_polys(&c, &ord));
    }
    let syz = module::syzygies_of(&cols, &degrees, &ord);
    let src = ModuleOrder::pot(order, degrees.clone());
    let keep = module::minimal_subset(&syz, nvars, &src);
    Ok(SyzygyModule {
        ambient: GradedFreeModule::new(degrees),
        columns: keep.into_iter().map(|i| syz[i].to_polys(columns.len(), order)).collect(),
    })
}

/// One level of a Schreyer frame: elements of the free module `P` whose
/// basis is the previous level, together with the order of `P`.
struct Level<F: Field> {
    elems: Vec<ModVec<F>>,
    ord: ModuleOrder,
    shifts: Vec<Monomial>,
    ties: Vec<usize>,
}

fn lex_desc(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    MonomialOrder::Lex.cmp(b, a)
}

/// Sorts by lead component, then lead monomial lexicographically descending.
/// This order makes each frame level strictly shorter in the variables used,
/// so the frame stops after at most `n` steps.
fn schreyer_sort<F: Field>(elems: &mut [ModVec<F>]) {
    elems.sort_by(|a, b| {
        let (la, lb) = (a.lead().unwrap(), b.lead().unwrap());
        la.comp.cmp(&lb.comp).then_with(|| lex_desc(&la.mon, &lb.mon))
    });
}

/// The induced order on the free module with basis `level.elems`.
fn induced<F: Field>(level: &Level<F>, mono: MonomialOrder) -> (ModuleOrder, Vec<Monomial>, Vec<usize>) {
    let shifts: Vec<Monomial> = level
        .elems
        .iter()
        .map(|e| {
            let l = e.lead().unwrap();
            l.mon.mul(&level.shifts[l.comp])
        })
        .collect();
    let mut idx: Vec<usize> = (0..level.elems.len()).collect();
    idx.sort_by_key(|&k| (level.ties[level.elems[k].lead().unwrap().comp], k));
    let mut ties = vec![0; idx.len()];
    for (r, &k) in idx.iter().enumerate() {
        ties[k] = r;
    }
    (ModuleOrder::schreyer_with_ties(mono, shifts.clone(), ties.clone()), shifts, ties)
}

/// The next frame level: one syzygy for every pair whose leading term
/// `m e_a` is minimal among pairs on `a`.
fn next_level<F: Field>(level: &Level<F>, mono: MonomialOrder) -> Level<F> {
    let (ord_n, shifts, ties) = induced(level, mono);
    let elems = &level.elems;
    let mut index = LeadIndex::new(level.ord.rank());
    for (k, e) in elems.iter().enumerate() {
        let l = e.lead().unwrap();
        index.push(l.comp, l.mon, k);
    }
    let mut out = Vec::new();
    for a in 0..elems.len() {
        let la = elems[a].lead().unwrap();
        let mut cands: Vec<(Monomial, usize)> = Vec::new();
        for (b, eb) in elems.iter().enumerate().skip(a + 1) {
            let lb = eb.lead().unwrap();
            if lb.comp != la.comp {
                continue;
            }
            let m = la.mon.quotient_of(&la.mon.lcm(&lb.mon)).unwrap();
            cands.push((m, b));
        }
        let mut kept: Vec<(Monomial, usize)> = Vec::new();
        for (i, (m, b)) in cands.iter().enumerate() {
            let dominated = cands
                .iter()
                .enumerate()
                .any(|(j, (o, _))| o.divides(m) && (o != m || j < i));
            if !dominated {
                kept.push((*m, *b));
            }
        }
        for (ma, b) in kept {
            let lb = elems[b].lead().unwrap();
            let mb = lb.mon.quotient_of(&la.mon.mul(&ma)).unwrap();
            let (ca, cb) = (la.coef.inv().unwrap(), lb.coef.inv().unwrap());
            let v = module::spoly(&elems[a], &elems[b], &la.mon.lcm(&lb.mon), &level.ord);
            let mut qs = Vec::new();
            let rem = divide(&v, elems, &index, &level.ord, false, Some(&mut qs));
            debug_assert!(rem.is_zero(), "S-pair did not reduce to zero");
            let mut terms = vec![
                ModTerm { comp: a, mon: ma, coef: ca.clone() },
                ModTerm { comp: b, mon: mb, coef: -cb.clone() },
            ];
            terms.extend(qs.into_iter().map(|(k, m, c)| ModTerm { comp: k, mon: m, coef: -c }));
            let s = ModVec::from_terms(terms, &ord_n);
            debug_assert_eq!(s.lead().map(|t| (t.comp, t.mon)), Some((a, ma)));
            out.push(s);
        }
    }
    schreyer_sort(&mut out);
    Level { elems: out, ord: ord_n, shifts, ties }
}

/// A (generally non-minimal) free resolution of `S/I` read off a Schreyer
/// frame of a Gröbner basis of `I`.
pub fn schreyer_resolution<F: Field>(ideal: &Ideal<F>) -> GradedComplex<F> {
    let order = ideal.order();
    let base = ModuleOrder::top(order, vec![0]);
    let gens: Vec<ModVec<F>> = ideal.gens().iter().map(|g| ModVec::from_polys(std::slice::from_ref(g), &base)).collect();
    let mut elems = module::groebner_basis(&gens, &base);
    schreyer_sort(&mut elems);
    let mut level = Level { elems, ord: base, shifts: vec![Monomial::one()], ties: vec![0] };
    let mut modules = vec![GradedFreeModule::new(vec![0])];
    let mut maps = Vec::new();
    while !level.elems.is_empty() {
        let rows = level.ord.rank();
        let degrees: Vec<u32> = level.elems.iter().map(|e| e.degree(&level.ord).unwrap()).collect();
        let columns: Vec<Vec<Polynomial<F>>> = level.elems.iter().map(|e| e.to_polys(rows, order)).collect();
        maps.push(PolyMatrix::from_columns(rows, columns, order));
        modules.push(GradedFreeModule::new(degrees));
        level = next_level(&level, order);
    }
    GradedComplex::new(ideal.ring().clone(), order, modules, maps).expect("frame shapes agree")
}

/// The minimal graded free resolution of `S/I`.
pub fn minimal_free_resolution<F: Field>(ideal: &Ideal<F>) -> GradedComplex<F> {
    schreyer_resolution(ideal).minimize()
}

/// Cuts `S/I` by generic linear forms while they stay regular, each time
/// eliminating the last variable. Betti numbers and the Hilbert series
/// numerator are unchanged; regularity is certified by that numerator.
pub(crate) fn regular_sections<F: Field>(ideal: &Ideal<F>) -> Ideal<F> {
    let order = MonomialOrder::Grevlex;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut cur = ideal.with_order(order);
    if cur.is_unit() {
        return cur;
    }
    let mut k = hilbert_numerator(&cur);
    while cur.nvars() > 1 {
        let v = cur.nvars() - 1;
        let value = Polynomial::from_terms((0..v).map(|i| (Monomial::var(i), F::random(&mut rng))).collect(), order);
        let gens = cur.gens().iter().map(|g| g.substitute(v, &value).map_monomials(order, |m| m.drop_var(v))).collect();
        let Ok(ring) = cur.ring().without(v) else { break };
        let Ok(next) = Ideal::new(Arc::new(ring), gens) else { break };
        let kn = hilbert_numerator(&next);
        if kn != k {
            break;
        }
        cur = next;
        k = kn;
    }
    cur
}

/// Graded Betti numbers of `S/I`.
///
/// Computed on a regular hyperplane section of `S/I` from the constant
/// parts of a Schreyer resolution, which gives the same numbers as
/// minimizing [`minimal_free_resolution`].
pub fn betti_numbers<F: Field>(ideal: &Ideal<F>) -> BettiTable {
    schreyer_resolution(&regular_sections(ideal)).tor_table()
}

/// Number of minimal syzygies of each degree, read off a Betti table row.
pub fn syzygy_degrees(table: &BettiTable, i: usize) -> BTreeMap<u32, usize> {
    table.entries().iter().filter(|((k, _), _)| *k == i).map(|(&(_, j), &c)| (j, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;
    use crate::field::F32003;
    use crate::parse::{parse_ideal_file, parse_poly};

    type F = F32003;

    fn ideal(src: &str) -> Ideal<F> {
        parse_ideal_file::<F>(src, MonomialOrder::Grevlex).unwrap().ideal().unwrap()
    }

    #[test]
    fn one_quadric() {
        let i = ideal("ring Fp[x,y]; ideal (x^2+y^2);");
        let t = betti_numbers(&i);
        assert_eq!(t, BettiTable::from_entries([((0, 0), 1), ((1, 2), 1)]));
    }

    #[test]
    fn two_monomials_sharing_a_variable() {
        let i = ideal("ring Fp[x,z,w]; ideal (x*z, z*w);");
        let c = schreyer_resolution(&i);
        assert!(c.is_complex() && c.is_graded());
        assert_eq!(betti_numbers(&i), BettiTable::from_entries([((0, 0), 1), ((1, 2), 2), ((2, 3), 1)]));
    }

    #[test]
    fn filtration_example_table() {
        let i = ideal("ring Fp[x,y,z,w]; ideal (x*y, x*w, (x-y)*z, z^2, x^2+z*w);");
        let c = schreyer_resolution(&i);
        assert!(c.is_complex() && c.is_graded());
        let m = c.minimize();
        assert!(m.is_complex() && m.is_minimal());
        let t = m.betti_table().unwrap();
        let want = BettiTable::from_entries([((0, 0), 1), ((1, 2), 5), ((2, 3), 4), ((2, 4), 4), ((3, 5), 6), ((4, 6), 2)]);
        assert_eq!(t, want);
    }

    #[test]
    fn syzygies_of_two_monomials() {
        let r = RingDescriptor::new(["x", "y", "z"]).unwrap();
        let p = |s: &str| parse_poly::<F>(s, &r, MonomialOrder::Grevlex).unwrap();
        let target = GradedFreeModule::new(vec![0]);
        let s = syzygies(&target, &[vec![p("x*y")], vec![p("y*z")]], 3, MonomialOrder::Grevlex).unwrap();
        assert_eq!(s.len(), 1);
        let col = &s.columns[0];
        // (z, -x) up to scalar
        let c = col[0].leading_coeff().unwrap();
        assert_eq!(col[0].scale(&c.inv().unwrap()), p("z"));
        assert_eq!(col[1].scale(&c.inv().unwrap()), p("-x"));
        assert_eq!(s.degrees(), vec![3]);
    }

    #[test]
    fn koszul_syzygies_of_a_regular_sequence() {
        let r = RingDescriptor::new(["x", "y", "z"]).unwrap();
        let p = |s: &str| parse_poly::<F>(s, &r, MonomialOrder::Grevlex).unwrap();
        let target = GradedFreeModule::new(vec![0]);
        let s = syzygies(&target, &[vec![p("x^2")], vec![p("y^2")], vec![p("z^2+x*y")]], 3, MonomialOrder::Grevlex).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.degrees().iter().all(|&d| d == 4));
    }
}

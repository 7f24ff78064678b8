//! Straightening ideals of posets of distributive type: generators, the
//! degree-reverse-lexicographic order over a linear extension, normal forms,
//! Buchberger verification, standard monomials and Hilbert functions.

use crate::complex::{order_complex, SimplicialComplex};
use crate::lattice::{is_distributive_type, Lattice};
use crate::linalg::{rank_of_rows, Field, Rat, SparseVec};
use crate::poset::Poset;
use crate::{Error, Result};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

pub const BUCHBERGER_POSET_CAP: usize = 8;
pub const HILBERT_DEGREE_CAP: usize = 6;

/// Finitely supported exponent vector; variables are poset element indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: BTreeMap<usize, u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { exps: BTreeMap::new() }
    }

    pub fn var(v: usize) -> Monomial {
        Monomial { exps: [(v, 1)].into() }
    }

    pub fn from_pairs(pairs: &[(usize, u32)]) -> Monomial {
        let mut exps = BTreeMap::new();
        for &(v, e) in pairs {
            if e > 0 {
                *exps.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn exp(&self, v: usize) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps.keys().copied().collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            *exps.entry(v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|(&v, &e)| other.exp(v) >= e)
    }

    /// other / self; caller guarantees divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        let mut exps = BTreeMap::new();
        for (&v, &e) in &other.exps {
            let q = e - self.exp(v);
            if q > 0 {
                exps.insert(v, q);
            }
        }
        Monomial { exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            let slot = exps.entry(v).or_insert(0);
            *slot = (*slot).max(e);
        }
        Monomial { exps }
    }

    pub fn format(&self, labels: &[String]) -> String {
        if self.exps.is_empty() {
            return "1".into();
        }
        self.exps
            .iter()
            .flat_map(|(&v, &e)| std::iter::repeat(format!("x_{}", labels[v])).take(e as usize))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Degree-reverse-lexicographic order induced by a linear extension of the
/// poset: among equal-degree monomials, the one with the smaller exponent at
/// the earliest extension position wins.
#[derive(Debug, Clone)]
pub struct MonomialOrder {
    pos: Vec<usize>,
}

impl MonomialOrder {
    pub fn from_extension(extension: &[usize]) -> MonomialOrder {
        let mut pos = vec![0usize; extension.len()];
        for (k, &v) in extension.iter().enumerate() {
            pos[v] = k;
        }
        MonomialOrder { pos }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for p in 0..self.pos.len() {
            let v = self.positions_inverse(p);
            let (ea, eb) = (a.exp(v), b.exp(v));
            if ea != eb {
                // less of the smallest distinguishing variable means larger
                return eb.cmp(&ea);
            }
        }
        Ordering::Equal
    }

    fn positions_inverse(&self, p: usize) -> usize {
        // pos is a permutation; invert lazily (n is small)
        self.pos.iter().position(|&q| q == p).unwrap()
    }
}

/// Exact rational polynomial in the poset variables.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn term(m: Monomial, c: Rat) -> Polynomial {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    /// self * c * m
    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Polynomial {
        let mut out = Polynomial::zero();
        for (mm, cc) in &self.terms {
            out.add_term(mm.mul(m), cc.mul(c));
        }
        out
    }

    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Sorted term list, largest term first under the given order.
    pub fn format(&self, labels: &[String], order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Monomial, &Rat)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let mut s = String::new();
        for (k, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { (*c).clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if abs.is_one() && m.degree() > 0 {
                s.push_str(&m.format(labels));
            } else if m.degree() == 0 {
                s.push_str(&format!("{}", abs));
            } else {
                s.push_str(&format!("{}*{}", abs, m.format(labels)));
            }
        }
        s
    }
}

/// One straightening generator for an incomparable pair.
#[derive(Debug, Clone)]
pub struct Generator {
    pub alpha: usize,
    pub beta: usize,
    pub poly: Polynomial,
}

/// The ideal J_P together with the monomial order that exposes its quadratic
/// leading terms.
#[derive(Debug, Clone)]
pub struct StraighteningIdeal {
    poset: Poset,
    extension: Vec<usize>,
    order: MonomialOrder,
    generators: Vec<Generator>,
}

impl StraighteningIdeal {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn extension(&self) -> &[usize] {
        &self.extension
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn serialize(&self) -> String {
        let mut s = String::new();
        for g in &self.generators {
            s.push_str(&g.poly.format(self.poset.labels(), &self.order));
            s.push('\n');
        }
        s
    }
}

/// Meet of two elements computed as the unique maximal common lower bound;
/// well defined whenever some interval [0̂, z] contains both.
fn meet_of(p: &Poset, a: usize, b: usize) -> usize {
    let lower: Vec<usize> =
        (0..p.n()).filter(|&x| p.leq(x, a) && p.leq(x, b)).collect();
    let maximal: Vec<usize> = lower
        .iter()
        .copied()
        .filter(|&x| !lower.iter().any(|&y| x != y && p.lt(x, y)))
        .collect();
    assert_eq!(maximal.len(), 1, "meet must be unique below a common upper bound");
    maximal[0]
}

fn generator_for_pair(p: &Poset, a: usize, b: usize) -> Polynomial {
    let mut poly = Polynomial::term(Monomial::var(a).mul(&Monomial::var(b)), Rat::from_int(1));
    let mubs = p.minimal_upper_bounds(a, b);
    if mubs.is_empty() {
        return poly;
    }
    let meet = meet_of(p, a, b);
    for g in mubs {
        poly.add_term(Monomial::var(meet).mul(&Monomial::var(g)), Rat::from_int(-1));
    }
    poly
}

/// Generators f_{α,β} over all incomparable pairs: x_α x_β alone when the
/// pair has no common upper bound, otherwise x_α x_β − x_{α∧β} Σ_γ x_γ with γ
/// running over the minimal upper bounds.
pub fn straightening_generators(p: &Poset) -> Result<StraighteningIdeal> {
    if !is_distributive_type(p) {
        return Err(Error::NotDistributiveType);
    }
    build_ideal(p.clone(), |p, a, b| generator_for_pair(p, a, b))
}

/// Straightening generators after modding out the variables of every element
/// comparable to all others. Such a variable maps the standard monomial basis
/// injectively into itself, so these variables form a regular sequence of
/// linear forms; the quotient keeps the Gorenstein property, the CM type,
/// level-ness, and the regularity while shrinking every graded piece.
/// Setting the stripped variables to zero in each generator leaves either the
/// bare product x_α x_β or the original binomial with stripped terms dropped.
/// Returns None when every element is comparable to every other.
pub fn reduced_straightening_generators(
    p: &Poset,
) -> Result<Option<(Poset, StraighteningIdeal)>> {
    if !is_distributive_type(p) {
        return Err(Error::NotDistributiveType);
    }
    let spine: Vec<bool> = (0..p.n())
        .map(|x| (0..p.n()).all(|y| p.comparable(x, y)))
        .collect();
    let keep: Vec<usize> = (0..p.n()).filter(|&x| !spine[x]).collect();
    if keep.is_empty() {
        return Ok(None);
    }
    let reduced = p.induced(&keep);
    let pos: HashMap<usize, usize> =
        keep.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let full = p.clone();
    let ideal = build_ideal(reduced.clone(), move |_, a2, b2| {
        let (a, b) = (keep[a2], keep[b2]);
        let mut poly =
            Polynomial::term(Monomial::var(a2).mul(&Monomial::var(b2)), Rat::from_int(1));
        let mubs = full.minimal_upper_bounds(a, b);
        if mubs.is_empty() {
            return poly;
        }
        let meet = meet_of(&full, a, b);
        if spine[meet] {
            return poly;
        }
        for g in mubs {
            if !spine[g] {
                poly.add_term(
                    Monomial::var(pos[&meet]).mul(&Monomial::var(pos[&g])),
                    Rat::from_int(-1),
                );
            }
        }
        poly
    })?;
    Ok(Some((reduced, ideal)))
}

/// Join-meet binomials x_α x_β − x_{α∨β} x_{α∧β} of an arbitrary lattice.
pub fn join_meet_generators(l: &Lattice) -> StraighteningIdeal {
    let l2 = l.clone();
    build_ideal(l.poset().clone(), move |_, a, b| {
        let mut poly =
            Polynomial::term(Monomial::var(a).mul(&Monomial::var(b)), Rat::from_int(1));
        poly.add_term(
            Monomial::var(l2.join(a, b)).mul(&Monomial::var(l2.meet(a, b))),
            Rat::from_int(-1),
        );
        poly
    })
    .expect("pair enumeration cannot fail")
}

fn build_ideal(
    p: Poset,
    gen: impl Fn(&Poset, usize, usize) -> Polynomial,
) -> Result<StraighteningIdeal> {
    let extension = p.linear_extension();
    let order = MonomialOrder::from_extension(&extension);
    let mut generators = Vec::new();
    for a in 0..p.n() {
        for b in a + 1..p.n() {
            if p.comparable(a, b) {
                continue;
            }
            let poly = gen(&p, a, b);
            debug_assert_eq!(
                poly.leading(&order).map(|(m, _)| m.clone()),
                Some(Monomial::var(a).mul(&Monomial::var(b))),
                "leading monomial must be the incomparable product"
            );
            generators.push(Generator { alpha: a, beta: b, poly });
        }
    }
    Ok(StraighteningIdeal { poset: p, extension, order, generators })
}

/// Remainder of multivariate division by the generators under the ideal's
/// order. The result is supported on multichain monomials only.
pub fn normal_form(f: &Polynomial, j: &StraighteningIdeal) -> Polynomial {
    let by_pair: HashMap<(usize, usize), usize> = j
        .generators
        .iter()
        .enumerate()
        .map(|(k, g)| ((g.alpha, g.beta), k))
        .collect();
    let reducer = |m: &Monomial| -> Option<usize> {
        let sup = m.support();
        for (ia, &a) in sup.iter().enumerate() {
            for &b in &sup[ia + 1..] {
                if let Some(&k) = by_pair.get(&(a, b)) {
                    return Some(k);
                }
            }
        }
        None
    };
    let mut rest = f.clone();
    let mut out = Polynomial::zero();
    while !rest.is_zero() {
        // peel the largest term; reduce it or move it to the remainder
        let (m, c) = {
            let (m, c) = rest.leading(&j.order).unwrap();
            (m.clone(), c.clone())
        };
        match reducer(&m) {
            None => {
                out.add_term(m.clone(), c.clone());
                rest.add_term(m, c.neg());
            }
            Some(k) => {
                let g = &j.generators[k];
                let lt = Monomial::var(g.alpha).mul(&Monomial::var(g.beta));
                let lc = g.poly.leading(&j.order).unwrap().1.clone();
                let q = lt.quotient_into(&m);
                rest = rest.sub(&g.poly.mul_term(&q, &c.mul(&lc.inv())));
            }
        }
    }
    out
}

/// S-pair reduction over all generator pairs. With `strict` the coprime
/// leading-term shortcut is disabled and every pair is reduced.
pub fn buchberger_check(j: &StraighteningIdeal, strict: bool) -> Result<bool> {
    buchberger_check_capped(j, strict, BUCHBERGER_POSET_CAP)
}

pub fn buchberger_check_capped(
    j: &StraighteningIdeal,
    strict: bool,
    cap: usize,
) -> Result<bool> {
    if j.poset.n() > cap {
        return Err(Error::SizeCapExceeded(format!(
            "buchberger check limited to {} elements, got {}",
            cap,
            j.poset.n()
        )));
    }
    for (k1, g1) in j.generators.iter().enumerate() {
        for g2 in &j.generators[k1 + 1..] {
            let lt1 = Monomial::var(g1.alpha).mul(&Monomial::var(g1.beta));
            let lt2 = Monomial::var(g2.alpha).mul(&Monomial::var(g2.beta));
            let lcm = lt1.lcm(&lt2);
            if !strict && lcm.degree() == lt1.degree() + lt2.degree() {
                // coprime leading terms: S-polynomial reduces to zero
                continue;
            }
            let lc1 = g1.poly.leading(&j.order).unwrap().1.clone();
            let lc2 = g2.poly.leading(&j.order).unwrap().1.clone();
            let s = g1
                .poly
                .mul_term(&lt1.quotient_into(&lcm), &lc1.inv())
                .sub(&g2.poly.mul_term(&lt2.quotient_into(&lcm), &lc2.inv()));
            if !normal_form(&s, j).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All degree-d monomials whose support is a multichain γ_1 ≤ … ≤ γ_d.
pub fn standard_monomials(p: &Poset, d: usize) -> Vec<Monomial> {
    let extension = p.linear_extension();
    let mut out = Vec::new();
    let mut chain: Vec<usize> = Vec::new();
    fn rec(
        p: &Poset,
        extension: &[usize],
        from: usize,
        left: usize,
        chain: &mut Vec<usize>,
        out: &mut Vec<Monomial>,
    ) {
        if left == 0 {
            out.push(Monomial::from_pairs(
                &chain.iter().map(|&v| (v, 1)).collect::<Vec<_>>(),
            ));
            return;
        }
        for k in from..extension.len() {
            let v = extension[k];
            // consecutive comparability along the extension yields a chain
            if let Some(&last) = chain.last() {
                if !p.leq(last, v) {
                    continue;
                }
            }
            chain.push(v);
            rec(p, extension, k, left - 1, chain, out);
            chain.pop();
        }
    }
    rec(p, &extension, 0, d, &mut chain, &mut out);
    out
}

/// Whether the support of a monomial is a multichain of P.
pub fn is_standard(p: &Poset, m: &Monomial) -> bool {
    let sup = m.support();
    sup.iter()
        .enumerate()
        .all(|(i, &a)| sup[i + 1..].iter().all(|&b| p.comparable(a, b)))
}

/// Stanley-Reisner complex of the initial ideal of J_P. Its facets are the
/// maximal cliques of the comparability relation, and the result is checked
/// structurally against the order complex of P.
pub fn initial_ideal(j: &StraighteningIdeal) -> SimplicialComplex {
    let p = &j.poset;
    let n = p.n();
    // vertices allowed together iff no generator leading term fits inside
    let mut forbidden = vec![vec![false; n]; n];
    for g in &j.generators {
        forbidden[g.alpha][g.beta] = true;
        forbidden[g.beta][g.alpha] = true;
    }
    let mut facets: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(
        n: usize,
        forbidden: &[Vec<bool>],
        from: usize,
        cur: &mut Vec<usize>,
        facets: &mut Vec<Vec<usize>>,
    ) {
        let mut extended = false;
        for v in from..n {
            if cur.iter().any(|&u| forbidden[u][v]) {
                continue;
            }
            extended = true;
            cur.push(v);
            rec(n, forbidden, v + 1, cur, facets);
            cur.pop();
        }
        if !extended {
            // maximal to the right; keep only cliques maximal in both directions
            let maximal = (0..n)
                .all(|v| cur.contains(&v) || cur.iter().any(|&u| forbidden[u][v]));
            if maximal {
                facets.push(cur.clone());
            }
        }
    }
    rec(n, &forbidden, 0, &mut cur, &mut facets);
    let delta = SimplicialComplex::from_facets(p.labels(), &facets)
        .expect("cliques are nonvoid");
    debug_assert_eq!(
        delta.serialize(),
        order_complex(p).expect("nonempty").serialize(),
        "initial complex must be the order complex"
    );
    delta
}

fn monomials_of_degree(n: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(n: usize, from: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::from_pairs(
                &cur.iter().map(|&v| (v, 1)).collect::<Vec<_>>(),
            ));
            return;
        }
        for v in from..n {
            cur.push(v);
            rec(n, v, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, 0, d, &mut cur, &mut out);
    out
}

/// Degree-d dimension of K[P]/J_P by two independent routes: the standard
/// monomial count and the corank of the degree-d slice of the ideal. The two
/// must agree; a mismatch would refute the Groebner claim.
pub fn hilbert_function(p: &Poset, d: usize) -> Result<u64> {
    if d > HILBERT_DEGREE_CAP {
        return Err(Error::DegreeBoundExceeded(format!(
            "hilbert degree cap {} exceeded by {}",
            HILBERT_DEGREE_CAP, d
        )));
    }
    let count = standard_monomials(p, d).len() as u64;
    let j = straightening_generators(p)?;
    let all = monomials_of_degree(p.n(), d);
    let index: HashMap<&Monomial, usize> =
        all.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut rows: Vec<SparseVec<Rat>> = Vec::new();
    for g in &j.generators {
        if g.poly.leading(&j.order).unwrap().0.degree() as usize > d {
            continue;
        }
        for m in monomials_of_degree(p.n(), d - 2) {
            let prod = g.poly.mul_term(&m, &Rat::from_int(1));
            let mut row: SparseVec<Rat> = prod
                .terms()
                .map(|(mm, c)| (index[mm], c.clone()))
                .collect();
            row.sort_by_key(|(c, _)| *c);
            rows.push(row);
        }
    }
    let by_rank = all.len() as u64 - rank_of_rows(rows) as u64;
    if by_rank != count {
        return Err(Error::InternalMismatch(format!(
            "hilbert mismatch in degree {}: standard count {}, rank route {}",
            d, count, by_rank
        )));
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::boolean;
    use crate::poset::enumerate_posets;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn figure1() -> Poset {
        Poset::parse(include_str!("../fixtures/figure1.poset")).unwrap()
    }

    fn chain(n: usize) -> Poset {
        let labels: Vec<String> = (0..n).map(|i| format!("c{}", i)).collect();
        let covers: Vec<(String, String)> = (1..n)
            .map(|i| (format!("c{}", i - 1), format!("c{}", i)))
            .collect();
        Poset::from_covers(&labels, &covers).unwrap()
    }

    #[test]
    fn chain_has_no_generators() {
        let j = straightening_generators(&chain(4)).unwrap();
        assert!(j.generators().is_empty());
    }

    #[test]
    fn figure1_generator_for_x2_x3() {
        let p = figure1();
        let j = straightening_generators(&p).unwrap();
        let a = p.index_of("x2").unwrap();
        let b = p.index_of("x3").unwrap();
        let g = j
            .generators()
            .iter()
            .find(|g| (g.alpha, g.beta) == (a.min(b), a.max(b)))
            .unwrap();
        assert_eq!(
            g.poly.format(p.labels(), j.order()),
            "x_x2*x_x3 - x_x0*x_x7 - x_x0*x_x6"
        );
    }

    #[test]
    fn boolean2_single_binomial_and_normal_form() {
        let l = boolean(2).unwrap();
        let j = straightening_generators(l.poset()).unwrap();
        assert_eq!(j.generators().len(), 1);
        let one = l.poset().index_of("{1}").unwrap();
        let two = l.poset().index_of("{2}").unwrap();
        let bot = l.poset().index_of("{}").unwrap();
        let top = l.poset().index_of("{1,2}").unwrap();
        let f = Polynomial::term(
            Monomial::var(one).mul(&Monomial::var(two)),
            Rat::from_int(1),
        );
        let nf = normal_form(&f, &j);
        let expect = Polynomial::term(
            Monomial::var(bot).mul(&Monomial::var(top)),
            Rat::from_int(1),
        );
        assert_eq!(nf, expect);
    }

    #[test]
    fn figure1_normal_form_of_x2_x3() {
        let p = figure1();
        let j = straightening_generators(&p).unwrap();
        let f = Polynomial::term(
            Monomial::var(p.index_of("x2").unwrap())
                .mul(&Monomial::var(p.index_of("x3").unwrap())),
            Rat::from_int(1),
        );
        let nf = normal_form(&f, &j);
        assert_eq!(nf.format(p.labels(), j.order()), "x_x0*x_x7 + x_x0*x_x6");
    }

    #[test]
    fn straightening_matches_join_meet_on_distributive_lattices() {
        for l in [boolean(2).unwrap(), boolean(3).unwrap(), crate::lattice::divisor(2, 1).unwrap()] {
            let js = straightening_generators(l.poset()).unwrap();
            let jm = join_meet_generators(&l);
            assert_eq!(js.generators().len(), jm.generators().len());
            for (a, b) in js.generators().iter().zip(jm.generators()) {
                assert_eq!(a.poly, b.poly, "pair ({}, {})", a.alpha, a.beta);
            }
        }
    }

    #[test]
    fn boolean3_has_nine_binomials() {
        let j = straightening_generators(boolean(3).unwrap().poset()).unwrap();
        assert_eq!(j.generators().len(), 9);
    }

    #[test]
    fn leading_terms_stable_under_random_extensions() {
        let p = figure1();
        let j = straightening_generators(&p).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            // random linear extension: repeatedly pick a random minimal element
            let mut remaining: Vec<usize> = (0..p.n()).collect();
            let mut ext: Vec<usize> = Vec::new();
            while !remaining.is_empty() {
                let mins: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|&x| !remaining.iter().any(|&y| y != x && p.lt(y, x)))
                    .collect();
                let &pick = mins.choose(&mut rng).unwrap();
                ext.push(pick);
                remaining.retain(|&x| x != pick);
            }
            let order = MonomialOrder::from_extension(&ext);
            for g in j.generators() {
                assert_eq!(
                    g.poly.leading(&order).unwrap().0,
                    &Monomial::var(g.alpha).mul(&Monomial::var(g.beta))
                );
            }
        }
    }

    #[test]
    fn buchberger_small_exhaustive() {
        for n in 1..=5 {
            for p in enumerate_posets(n).unwrap() {
                if !is_distributive_type(&p) {
                    continue;
                }
                let j = straightening_generators(&p).unwrap();
                assert!(buchberger_check(&j, false).unwrap(), "poset {:?}", p.covers());
            }
        }
    }

    #[test]
    fn buchberger_figure1_and_strict_mode() {
        let p = figure1();
        let j = straightening_generators(&p).unwrap();
        assert!(buchberger_check_capped(&j, false, 9).unwrap());
        let l = boolean(3).unwrap();
        let j3 = straightening_generators(l.poset()).unwrap();
        assert_eq!(
            buchberger_check(&j3, false).unwrap(),
            buchberger_check(&j3, true).unwrap()
        );
    }

    #[test]
    fn asl2_least_factor_property() {
        // trailing standard terms of every generator drop below both factors
        for n in 1..=5 {
            for p in enumerate_posets(n).unwrap() {
                if !is_distributive_type(&p) {
                    continue;
                }
                let j = straightening_generators(&p).unwrap();
                for g in j.generators() {
                    for (m, _) in g.poly.terms() {
                        if m == &Monomial::var(g.alpha).mul(&Monomial::var(g.beta)) {
                            continue;
                        }
                        assert!(is_standard(&p, m));
                        let least = *m
                            .support()
                            .iter()
                            .min_by_key(|&&v| p.rank_of_index(v))
                            .unwrap();
                        assert!(p.leq(least, g.alpha) && p.leq(least, g.beta));
                    }
                }
            }
        }
    }

    #[test]
    fn standard_monomial_counts() {
        let l = boolean(2).unwrap();
        assert_eq!(standard_monomials(l.poset(), 1).len(), 4);
        assert_eq!(standard_monomials(l.poset(), 2).len(), 9);
        let c = chain(4);
        // multisets from a chain: C(n + d - 1, d)
        assert_eq!(standard_monomials(&c, 3).len(), 20);
        assert_eq!(standard_monomials(&c, 0).len(), 1);
    }

    #[test]
    fn standard_monomials_are_multichains() {
        let p = figure1();
        for d in 0..=3 {
            for m in standard_monomials(&p, d) {
                assert!(is_standard(&p, &m));
                assert_eq!(m.degree() as usize, d);
            }
        }
    }

    #[test]
    fn normal_form_fixes_standard_and_is_idempotent() {
        let p = figure1();
        let j = straightening_generators(&p).unwrap();
        for m in standard_monomials(&p, 2) {
            let f = Polynomial::term(m, Rat::from_int(1));
            assert_eq!(normal_form(&f, &j), f);
        }
        for a in 0..p.n() {
            for b in 0..p.n() {
                let f = Polynomial::term(
                    Monomial::var(a).mul(&Monomial::var(b)),
                    Rat::from_int(1),
                );
                let nf = normal_form(&f, &j);
                assert_eq!(normal_form(&nf, &j), nf);
                for (m, _) in nf.terms() {
                    assert!(is_standard(&p, m));
                }
            }
        }
    }

    #[test]
    fn initial_complex_is_order_complex() {
        for p in [figure1(), chain(3)] {
            let j = straightening_generators(&p).unwrap();
            let delta = initial_ideal(&j);
            assert_eq!(delta.serialize(), order_complex(&p).unwrap().serialize());
        }
        let l = boolean(2).unwrap();
        let j = straightening_generators(l.poset()).unwrap();
        assert_eq!(initial_ideal(&j).facets().len(), 2);
    }

    #[test]
    fn hilbert_function_cases() {
        let l = boolean(2).unwrap();
        assert_eq!(hilbert_function(l.poset(), 0).unwrap(), 1);
        assert_eq!(hilbert_function(l.poset(), 2).unwrap(), 9);
        let c = chain(3);
        assert_eq!(hilbert_function(&c, 4).unwrap(), 15);
        let p = figure1();
        let d2 = hilbert_function(&p, 2).unwrap();
        assert_eq!(d2, standard_monomials(&p, 2).len() as u64);
        assert!(hilbert_function(&c, 9).is_err());
    }

    #[test]
    fn grevlex_order_sanity() {
        // three variables ordered v0 < v1 < v2
        let order = MonomialOrder::from_extension(&[0, 1, 2]);
        let m = |pairs: &[(usize, u32)]| Monomial::from_pairs(pairs);
        let expect = vec![
            m(&[(2, 2)]),
            m(&[(1, 1), (2, 1)]),
            m(&[(1, 2)]),
            m(&[(0, 1), (2, 1)]),
            m(&[(0, 1), (1, 1)]),
            m(&[(0, 2)]),
        ];
        for w in expect.windows(2) {
            assert_eq!(order.cmp(&w[0], &w[1]), Ordering::Greater);
        }
    }
}

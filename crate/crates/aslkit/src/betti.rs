//! Graded Betti tables by two independent routes (Hochster's formula and
//! Koszul homology), derived ring invariants, chordality and linear
//! resolution tests.
//!
//! The Koszul route works directly on quotient rings presented by a basis of
//! monomials per degree. For Cohen-Macaulay rings too large for a direct
//! Koszul run, the table is computed on the Artinian reduction by a random
//! linear system of parameters; the reduction is certified by an exact
//! Hilbert function match before any conclusion is drawn from it.

use crate::complex::{fh_vectors, order_complex, SimplicialComplex};
use crate::ideal::{
    normal_form, reduced_straightening_generators, straightening_generators, Monomial,
    Polynomial, StraighteningIdeal,
};
use crate::lattice::is_distributive_type;
use crate::linalg::{rank_of_rows, Echelon, Field, FieldSpec, Rat, SparseVec};
use crate::poset::{ComparabilityGraph, Poset};
use crate::topology::{is_cohen_macaulay, reduced_homology};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// Vertex cap for the full Hochster sum (2^16 induced subcomplexes), counted
/// after cone apexes are stripped.
pub const HOCHSTER_VERTEX_CAP: usize = 16;

/// Variable cap for a direct Koszul run.
pub const KOSZUL_VAR_CAP: usize = 12;

/// Cap on m - dim for the Koszul run over an Artinian reduction.
pub const ARTINIAN_VAR_CAP: usize = 13;

const ARTINIAN_SEED: u64 = 0x5eed_a51c;

/// Graded Betti numbers of a quotient ring S/I over m variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    num_vars: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiEntryJson {
    i: usize,
    j: usize,
    beta: u64,
}

#[derive(Serialize, Deserialize)]
struct BettiTableJson {
    num_vars: usize,
    entries: Vec<BettiEntryJson>,
}

impl BettiTable {
    pub fn new(num_vars: usize) -> BettiTable {
        BettiTable { num_vars, entries: BTreeMap::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn add(&mut self, i: usize, j: usize, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_insert(0) += beta;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// max i with a nonzero entry
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// max j - i over nonzero entries
    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn column_total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(ii, _), _)| ii == i)
            .map(|(_, &b)| b)
            .sum()
    }

    /// Internal degrees with nonzero entries in the last column.
    pub fn last_column(&self) -> Vec<(usize, u64)> {
        let p = self.pd();
        self.entries
            .iter()
            .filter(|(&(i, _), _)| i == p)
            .map(|(&(_, j), &b)| (j, b))
            .collect()
    }

    pub fn to_json(&self) -> String {
        let mirror = BettiTableJson {
            num_vars: self.num_vars,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &beta)| BettiEntryJson { i, j, beta })
                .collect(),
        };
        serde_json::to_string(&mirror).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<BettiTable> {
        let mirror: BettiTableJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut t = BettiTable::new(mirror.num_vars);
        for e in mirror.entries {
            t.add(e.i, e.j, e.beta);
        }
        Ok(t)
    }
}

/// Vertices lying in every facet. Restrictions to subsets containing one are
/// cones, hence acyclic, so they never contribute to the Hochster sum; and no
/// minimal non-face contains one, so the ideal ignores their variables.
pub fn cone_apexes(delta: &SimplicialComplex) -> Vec<usize> {
    (0..delta.n_vertices())
        .filter(|&v| delta.facets().iter().all(|f| f.contains(&v)))
        .collect()
}

fn restrict(delta: &SimplicialComplex, w: &[usize]) -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = delta
        .facets()
        .iter()
        .map(|f| f.iter().copied().filter(|v| w.contains(v)).collect())
        .collect();
    SimplicialComplex::from_facets(delta.vertex_labels(), &facets)
        .expect("restriction keeps the empty face")
}

/// β_{i,j}(S/I_Δ) = Σ_{|W|=j} dim H̃_{j-i-1}(Δ|_W) over the chosen field.
pub fn hochster_betti(delta: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    let apexes = cone_apexes(delta);
    let free: Vec<usize> = (0..delta.n_vertices())
        .filter(|v| !apexes.contains(v))
        .collect();
    if free.len() > HOCHSTER_VERTEX_CAP {
        return Err(Error::SizeCapExceeded(format!(
            "hochster sum over {} non-apex vertices",
            free.len()
        )));
    }
    let mut table = BettiTable::new(delta.n_vertices());
    for mask in 0u64..(1u64 << free.len()) {
        let w: Vec<usize> = free
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let j = w.len();
        let profile = reduced_homology(&restrict(delta, &w), field)?;
        for (k, &dim) in profile.dims.iter().enumerate() {
            if dim == 0 {
                continue;
            }
            let hom_degree = k as i64 - 1;
            let i = j as i64 - hom_degree - 1;
            if i >= 0 {
                table.add(i as usize, j, dim as u64);
            }
        }
    }
    Ok(table)
}

/// A standard graded quotient ring presented by a monomial basis per degree:
/// either a Stanley-Reisner quotient (multiplication kills non-faces) or a
/// straightening quotient (multiplication straightens via normal forms).
pub struct GradedQuotient {
    support: SimplicialComplex,
    num_vars: usize,
    ideal: Option<StraighteningIdeal>,
    basis_cache: Vec<DegreeBasis>,
}

struct DegreeBasis {
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl GradedQuotient {
    pub fn stanley_reisner(delta: SimplicialComplex) -> GradedQuotient {
        let num_vars = delta.n_vertices();
        GradedQuotient { support: delta, num_vars, ideal: None, basis_cache: Vec::new() }
    }

    pub fn straightening(p: &Poset) -> Result<GradedQuotient> {
        let ideal = straightening_generators(p)?;
        let support = order_complex(p)?;
        Ok(GradedQuotient {
            support,
            num_vars: p.n(),
            ideal: Some(ideal),
            basis_cache: Vec::new(),
        })
    }

    /// Straightening quotient with the variables of all-comparable elements
    /// already modded out. Those variables are a regular sequence of linear
    /// forms, so the Gorenstein property, CM type, level-ness, and regularity
    /// match `straightening` while every graded piece is smaller. A chain
    /// collapses to a single point rather than the zero-variable ring.
    pub fn straightening_reduced(p: &Poset) -> Result<GradedQuotient> {
        match reduced_straightening_generators(p)? {
            Some((reduced, ideal)) => {
                let support = order_complex(&reduced)?;
                Ok(GradedQuotient {
                    support,
                    num_vars: reduced.n(),
                    ideal: Some(ideal),
                    basis_cache: Vec::new(),
                })
            }
            None => GradedQuotient::straightening(&p.induced(&[0])),
        }
    }

    pub fn support(&self) -> &SimplicialComplex {
        &self.support
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn krull_dim(&self) -> usize {
        (self.support.dim() + 1) as usize
    }

    pub fn h_vector(&self) -> Vec<i64> {
        fh_vectors(&self.support).h
    }

    fn ensure_degree(&mut self, d: usize) {
        while self.basis_cache.len() <= d {
            let deg = self.basis_cache.len();
            let monos = self.enumerate_basis(deg);
            let index = monos
                .iter()
                .enumerate()
                .map(|(k, m)| (m.clone(), k))
                .collect();
            self.basis_cache.push(DegreeBasis { monos, index });
        }
    }

    /// Degree-d monomials whose support is a face of the support complex; in
    /// the straightening case these are exactly the standard monomials.
    fn enumerate_basis(&self, d: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        fn rec(
            q: &GradedQuotient,
            from: usize,
            left: usize,
            cur: &mut Vec<usize>,
            support_set: &mut Vec<usize>,
            out: &mut Vec<Monomial>,
        ) {
            if left == 0 {
                out.push(Monomial::from_pairs(
                    &cur.iter().map(|&v| (v, 1)).collect::<Vec<_>>(),
                ));
                return;
            }
            for v in from..q.num_vars {
                let fresh = support_set.last() != Some(&v);
                if fresh {
                    support_set.push(v);
                    if !q.support.contains_face(support_set) {
                        support_set.pop();
                        continue;
                    }
                }
                cur.push(v);
                rec(q, v, left - 1, cur, support_set, out);
                cur.pop();
                if fresh {
                    support_set.pop();
                }
            }
        }
        let mut support_set = Vec::new();
        rec(self, 0, d, &mut cur, &mut support_set, &mut out);
        out
    }

    pub fn basis_len(&mut self, d: usize) -> usize {
        self.ensure_degree(d);
        self.basis_cache[d].monos.len()
    }

    pub fn basis_monomial(&mut self, d: usize, idx: usize) -> Monomial {
        self.ensure_degree(d);
        self.basis_cache[d].monos[idx].clone()
    }

    /// Coordinates of x_v * (basis element idx of degree d) in the degree d+1
    /// basis.
    pub fn mult_var(&mut self, d: usize, idx: usize, v: usize) -> SparseVec<Rat> {
        self.ensure_degree(d + 1);
        let m = self.basis_cache[d].monos[idx].clone();
        let prod = m.mul(&Monomial::var(v));
        match &self.ideal {
            None => match self.basis_cache[d + 1].index.get(&prod) {
                Some(&k) => vec![(k, Rat::from_int(1))],
                None => Vec::new(),
            },
            Some(ideal) => {
                let nf = normal_form(&Polynomial::term(prod, Rat::from_int(1)), ideal);
                let mut row: SparseVec<Rat> = nf
                    .terms()
                    .map(|(mm, c)| (self.basis_cache[d + 1].index[mm], c.clone()))
                    .collect();
                row.sort_by_key(|(c, _)| *c);
                row
            }
        }
    }
}

fn combinations(m: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut cur = 0u64;
    fn rec(m: usize, from: usize, left: usize, cur: &mut u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(*cur);
            return;
        }
        for v in from..m {
            *cur |= 1 << v;
            rec(m, v + 1, left - 1, cur, out);
            *cur &= !(1 << v);
        }
    }
    rec(m, 0, k, &mut cur, &mut out);
    out
}

/// Multiplication maps for a fixed set of acting variables, as sparse columns
/// per degree. For the direct route these come straight from the quotient;
/// for the Artinian route they act on the reduced ring.
struct KoszulAction {
    /// mult[d][var_position][basis_idx] -> coordinates in degree d+1
    mult: Vec<Vec<Vec<SparseVec<Rat>>>>,
    dims: Vec<usize>,
}

impl KoszulAction {
    fn n_vars(&self) -> usize {
        self.mult.first().map(|m| m.len()).unwrap_or(0)
    }

    fn dim(&self, d: usize) -> usize {
        self.dims.get(d).copied().unwrap_or(0)
    }

    fn apply(&self, d: usize, var_pos: usize, idx: usize) -> &SparseVec<Rat> {
        &self.mult[d][var_pos][idx]
    }
}

/// β_{i,j} over the window j - i <= reg_bound via ranks of the graded Koszul
/// differential; `num_vars_reported` is the ambient variable count written
/// into the table (it differs from the acting variable count on the Artinian
/// route, where the change of rings keeps the Betti numbers).
fn koszul_table(
    action: &KoszulAction,
    reg_bound: usize,
    num_vars_reported: usize,
) -> BettiTable {
    let mv = action.n_vars();
    let mut table = BettiTable::new(num_vars_reported);
    let mut rank_memo: HashMap<(usize, usize), usize> = HashMap::new();
    let rank_d = |i: usize, j: usize, memo: &mut HashMap<(usize, usize), usize>| -> usize {
        // rank of the differential C_{i,j} -> C_{i-1,j}
        if i == 0 || i > mv {
            return 0;
        }
        let base = j as i64 - i as i64;
        if base < 0 {
            return 0;
        }
        let base = base as usize;
        if action.dim(base) == 0 {
            return 0;
        }
        if let Some(&r) = memo.get(&(i, j)) {
            return r;
        }
        let subsets = combinations(mv, i);
        let lower = combinations(mv, i - 1);
        let lower_index: HashMap<u64, usize> =
            lower.iter().enumerate().map(|(k, &s)| (s, k)).collect();
        let target_dim = action.dim(base + 1);
        let mut rows: Vec<SparseVec<Rat>> = Vec::new();
        for &t in &subsets {
            for b in 0..action.dim(base) {
                let mut entries: Vec<(usize, Rat)> = Vec::new();
                let mut sign = 1i64;
                for v in 0..mv {
                    if t >> v & 1 == 0 {
                        continue;
                    }
                    let rest = t & !(1u64 << v);
                    let block = lower_index[&rest] * target_dim;
                    for (c, x) in action.apply(base, v, b) {
                        entries.push((block + c, x.mul(&Rat::from_int(sign))));
                    }
                    sign = -sign;
                }
                entries.sort_by_key(|(c, _)| *c);
                rows.push(entries);
            }
        }
        let r = rank_of_rows(rows);
        memo.insert((i, j), r);
        r
    };
    for i in 0..=mv {
        let mut column_total = 0u64;
        for j in i..=i + reg_bound {
            let base = j - i;
            let cells = num_combinations(mv, i) * action.dim(base) as u64;
            if cells == 0 {
                continue;
            }
            let r1 = rank_d(i, j, &mut rank_memo);
            let r2 = rank_d(i + 1, j, &mut rank_memo);
            let beta = cells - r1 as u64 - r2 as u64;
            table.add(i, j, beta);
            column_total += beta;
        }
        // a zero column ends the minimal resolution
        if i > 0 && column_total == 0 {
            break;
        }
    }
    table
}

fn num_combinations(m: usize, k: usize) -> u64 {
    if k > m {
        return 0;
    }
    let mut c = 1u64;
    for t in 0..k {
        c = c * (m - t) as u64 / (t + 1) as u64;
    }
    c
}

fn direct_action(q: &mut GradedQuotient, max_degree: usize) -> KoszulAction {
    let m = q.num_vars();
    let mut mult = Vec::new();
    let mut dims = Vec::new();
    for d in 0..=max_degree {
        dims.push(q.basis_len(d));
    }
    dims.push(q.basis_len(max_degree + 1));
    for d in 0..=max_degree {
        let mut per_var = Vec::with_capacity(m);
        for v in 0..m {
            let col: Vec<SparseVec<Rat>> =
                (0..q.basis_len(d)).map(|b| q.mult_var(d, b, v)).collect();
            per_var.push(col);
        }
        mult.push(per_var);
    }
    KoszulAction { mult, dims }
}

/// Upper bound for reg(S/I) used to window the Koszul computation: the
/// regularity of the squarefree support quotient from Hochster's formula.
/// Initial-ideal semicontinuity makes this a bound for the straightening
/// quotient as well.
fn reg_bound_of(q: &GradedQuotient) -> Result<usize> {
    Ok(hochster_betti(&q.support, FieldSpec::Rational)?.reg())
}

/// Direct windowed Koszul run; no Cohen-Macaulay assumption.
pub fn koszul_betti_direct(q: &mut GradedQuotient) -> Result<BettiTable> {
    if q.num_vars() > KOSZUL_VAR_CAP {
        return Err(Error::SizeCapExceeded(format!(
            "direct koszul limited to {} variables, got {}",
            KOSZUL_VAR_CAP,
            q.num_vars()
        )));
    }
    let reg_bound = reg_bound_of(q)?;
    let action = direct_action(q, reg_bound);
    Ok(koszul_table(&action, reg_bound, q.num_vars()))
}

/// Artinian reduction of a Cohen-Macaulay quotient by a random linear system
/// of parameters, certified by an exact Hilbert function match.
pub struct ArtinianReduction {
    pub kept_vars: Vec<usize>,
    pub dims: Vec<usize>,
    pub seed: u64,
    mult: Vec<Vec<Vec<SparseVec<Rat>>>>,
}

pub fn artinian_reduction(q: &mut GradedQuotient, seed: u64) -> Result<ArtinianReduction> {
    use rand::Rng;
    use rand::SeedableRng;
    let m = q.num_vars();
    let d = q.krull_dim();
    let h = q.h_vector();
    if h.iter().any(|&x| x < 0) {
        return Err(Error::InternalMismatch(
            "negative h-vector entry on a ring assumed Cohen-Macaulay".into(),
        ));
    }
    let s = h
        .iter()
        .rposition(|&x| x != 0)
        .expect("h-vector starts with 1");
    for attempt in 0..5u64 {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
        let theta: Vec<Vec<i64>> = (0..d)
            .map(|_| (0..m).map(|_| rng.gen_range(1..=64)).collect())
            .collect();
        // kept variables complement the span of theta inside the linear forms
        let mut coeff = Echelon::new(true);
        for row in &theta {
            let v: SparseVec<Rat> = row
                .iter()
                .enumerate()
                .map(|(c, &x)| (c, Rat::from_int(x)))
                .collect();
            coeff.insert(v);
        }
        if coeff.rank() != d {
            continue;
        }
        let kept_vars: Vec<usize> =
            (0..m).filter(|&v| !coeff.is_pivot(v)).collect();
        // reduce degree by degree; the non-pivot monomials represent the
        // quotient basis
        let mut reducers: Vec<Echelon<Rat>> = Vec::with_capacity(s + 2);
        let mut bar_positions: Vec<Vec<usize>> = Vec::with_capacity(s + 2);
        reducers.push(Echelon::new(true));
        bar_positions.push(vec![0]);
        let mut ok = true;
        for j in 1..=s + 1 {
            let mut ech = Echelon::new(true);
            for t in &theta {
                for b in 0..q.basis_len(j - 1) {
                    let mut img: SparseVec<Rat> = Vec::new();
                    for (v, &c) in t.iter().enumerate() {
                        if c != 0 {
                            img = crate::linalg::axpy(
                                &img,
                                &Rat::from_int(c),
                                &q.mult_var(j - 1, b, v),
                            );
                        }
                    }
                    ech.insert(img);
                }
            }
            let bar: Vec<usize> =
                (0..q.basis_len(j)).filter(|&c| !ech.is_pivot(c)).collect();
            let expected = if j <= s { h[j] as usize } else { 0 };
            if bar.len() != expected {
                ok = false;
                break;
            }
            reducers.push(ech);
            bar_positions.push(bar);
        }
        if !ok {
            continue;
        }
        // induced multiplication by the kept variables on the reduction
        let dims: Vec<usize> = bar_positions.iter().map(|b| b.len()).collect();
        let mut mult = Vec::with_capacity(s + 1);
        for j in 0..=s {
            let pos_of: HashMap<usize, usize> = bar_positions[j + 1]
                .iter()
                .enumerate()
                .map(|(k, &c)| (c, k))
                .collect();
            let mut per_var = Vec::with_capacity(kept_vars.len());
            for &v in &kept_vars {
                let col: Vec<SparseVec<Rat>> = bar_positions[j]
                    .iter()
                    .map(|&b| {
                        let img = q.mult_var(j, b, v);
                        let red = reducers[j + 1].reduce(img);
                        red.into_iter().map(|(c, x)| (pos_of[&c], x)).collect()
                    })
                    .collect();
                per_var.push(col);
            }
            mult.push(per_var);
        }
        return Ok(ArtinianReduction {
            kept_vars,
            dims,
            seed: seed.wrapping_add(attempt),
            mult,
        });
    }
    Err(Error::ConsistencyFailure(
        "no random linear system of parameters matched the h-vector; \
         the ring does not appear to be Cohen-Macaulay"
            .into(),
    ))
}

impl ArtinianReduction {
    /// dim of the degree-j part of the socle: elements killed by every
    /// variable. The last Betti column of the original ring reads off as
    /// β_{m-d, m-d+j} = socle_j.
    pub fn socle_dims(&self) -> Vec<usize> {
        let s = self.dims.len() - 2;
        let mut out = Vec::with_capacity(s + 1);
        for j in 0..=s {
            let next = self.dims[j + 1];
            let rows: Vec<SparseVec<Rat>> = (0..self.dims[j])
                .map(|b| {
                    let mut row: SparseVec<Rat> = Vec::new();
                    for (vp, col) in self.mult[j].iter().enumerate() {
                        for (c, x) in &col[b] {
                            row.push((vp * next + c, x.clone()));
                        }
                    }
                    row.sort_by_key(|(c, _)| *c);
                    row
                })
                .collect();
            out.push(self.dims[j] - rank_of_rows(rows));
        }
        out
    }
}

/// Full Betti table of a Cohen-Macaulay quotient through its Artinian
/// reduction: β^S_{i,j}(R) = β^{S̄}_{i,j}(R/θR) for a regular linear sequence
/// θ, and the reduced ring is small enough for a complete Koszul run.
pub fn koszul_betti_artinian(q: &mut GradedQuotient, seed: u64) -> Result<BettiTable> {
    let ar = artinian_reduction(q, seed)?;
    if ar.kept_vars.len() > ARTINIAN_VAR_CAP {
        return Err(Error::SizeCapExceeded(format!(
            "artinian koszul limited to {} acting variables, got {}",
            ARTINIAN_VAR_CAP,
            ar.kept_vars.len()
        )));
    }
    let reg_bound = ar.dims.len() - 2;
    let action = KoszulAction { mult: ar.mult, dims: ar.dims.clone() };
    Ok(koszul_table(&action, reg_bound, q.num_vars()))
}

/// Betti table by the Koszul route, choosing the direct computation when the
/// variable count allows and falling back to the Artinian reduction for
/// larger Cohen-Macaulay rings.
pub fn koszul_betti(q: &mut GradedQuotient) -> Result<BettiTable> {
    if q.num_vars() <= KOSZUL_VAR_CAP {
        return koszul_betti_direct(q);
    }
    if is_cohen_macaulay(q.support(), FieldSpec::Rational)? {
        return koszul_betti_artinian(q, ARTINIAN_SEED);
    }
    Err(Error::SizeCapExceeded(format!(
        "{} variables and not Cohen-Macaulay: no feasible Koszul route",
        q.num_vars()
    )))
}

/// Derived invariants of a graded quotient ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingInvariants {
    pub dim: usize,
    pub depth: usize,
    pub reg: usize,
    pub pd: usize,
    pub cm: bool,
    pub cm_type: u64,
    pub gorenstein: bool,
    pub level: bool,
    pub h_vector: Vec<i64>,
}

pub fn ring_invariants(p: &Poset, field: FieldSpec) -> Result<RingInvariants> {
    let mut q = GradedQuotient::straightening(p)?;
    ring_invariants_of(&mut q, field)
}

pub fn ring_invariants_of(q: &mut GradedQuotient, field: FieldSpec) -> Result<RingInvariants> {
    let m = q.num_vars();
    let dim = q.krull_dim();
    let h = q.h_vector();
    let cm = is_cohen_macaulay(q.support(), field)?;
    if cm {
        // socle of the certified Artinian reduction: the last Betti column,
        // hence type, levelness and (for Cohen-Macaulay rings) regularity
        let ar = artinian_reduction(q, ARTINIAN_SEED)?;
        let socle = ar.socle_dims();
        let reg = socle.iter().rposition(|&x| x != 0).unwrap_or(0);
        let h_top = h.iter().rposition(|&x| x != 0).unwrap_or(0);
        if reg != h_top {
            return Err(Error::InternalMismatch(format!(
                "socle top degree {} disagrees with h-vector top {}",
                reg, h_top
            )));
        }
        let cm_type: u64 = socle.iter().map(|&x| x as u64).sum();
        let level = socle.iter().filter(|&&x| x != 0).count() == 1;
        Ok(RingInvariants {
            dim,
            depth: dim,
            reg,
            pd: m - dim,
            cm,
            cm_type,
            gorenstein: cm_type == 1,
            level,
            h_vector: h,
        })
    } else {
        let table = koszul_betti(q)?;
        let pd = table.pd();
        let depth = m - pd;
        if depth == dim {
            return Err(Error::ConsistencyFailure(format!(
                "depth {} equals dim but the topological oracle says not Cohen-Macaulay",
                depth
            )));
        }
        let cm_type = table.column_total(pd);
        Ok(RingInvariants {
            dim,
            depth,
            reg: table.reg(),
            pd,
            cm,
            cm_type,
            gorenstein: false,
            level: false,
            h_vector: h,
        })
    }
}

/// Chordality by maximum-cardinality search with explicit verification of the
/// produced elimination ordering.
pub fn is_chordal(g: &ComparabilityGraph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    // maximum cardinality search: repeatedly take the unvisited vertex with
    // the most visited neighbors
    let mut visited = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| weight[v])
            .unwrap();
        visited[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    // order reversed is a perfect elimination ordering iff the graph is
    // chordal; verify it outright
    let position: Vec<usize> = {
        let mut pos = vec![0; n];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        pos
    };
    for &v in &order {
        // earlier-ordered neighbors must form a clique at their latest member
        let earlier: Vec<usize> = g
            .neighbors(v)
            .into_iter()
            .filter(|&u| position[u] < position[v])
            .collect();
        let Some(&pivot) = earlier.iter().max_by_key(|&&u| position[u]) else {
            continue;
        };
        for &u in &earlier {
            if u != pivot && !g.has_edge(u, pivot) {
                return false;
            }
        }
    }
    true
}

/// Theorem route: J_P has a linear resolution iff the comparability graph of
/// P is chordal. The zero ideal (a chain) is vacuously linear.
pub fn has_linear_resolution(p: &Poset) -> Result<bool> {
    if !is_distributive_type(p) {
        return Err(Error::NotDistributiveType);
    }
    Ok(is_chordal(&p.comparability_graph()))
}

/// Independent route: reg(S/I_{Δ(P)}) <= 1 read off the Hochster table; by
/// the initial-ideal regularity transfer this decides linearity of J_P.
pub fn has_linear_resolution_betti_route(p: &Poset) -> Result<bool> {
    let delta = order_complex(p)?;
    Ok(hochster_betti(&delta, FieldSpec::Rational)?.reg() <= 1)
}

/// Cap on the non-apex vertex count for the early-exit linearity scan.
pub const LINEAR_SCAN_VERTEX_CAP: usize = 22;

/// Decides reg(S/I_{Δ(P)}) <= 1 by scanning induced restrictions: regularity
/// exceeds 1 exactly when some restriction carries reduced homology in degree
/// >= 1. Cone restrictions are skipped and the scan stops at the first
/// witness, which keeps posets beyond the full-table cap feasible.
pub fn linear_resolution_scan(p: &Poset) -> Result<bool> {
    let delta = order_complex(p)?;
    let apexes = cone_apexes(&delta);
    let free: Vec<usize> = (0..delta.n_vertices())
        .filter(|v| !apexes.contains(v))
        .collect();
    let n = free.len();
    if n > LINEAR_SCAN_VERTEX_CAP {
        return Err(Error::SizeCapExceeded(format!(
            "linearity scan over {} non-apex vertices",
            n
        )));
    }
    let adjacent: Vec<u64> = (0..n)
        .map(|a| {
            let mut m = 0u64;
            for b in 0..n {
                if b != a && delta.contains_face(&[free[a], free[b]]) {
                    m |= 1 << b;
                }
            }
            m
        })
        .collect();
    let closed: Vec<u64> = (0..n).map(|a| adjacent[a] | 1 << a).collect();
    'masks: for mask in 1u64..(1u64 << n) {
        if mask.count_ones() < 3 {
            // too few vertices for homology in degree >= 1
            continue;
        }
        // folding: a vertex whose closed neighborhood sits inside another's
        // can be removed without changing the homotopy type, so such
        // restrictions are covered by a smaller one already scanned
        let mut bits = mask;
        while bits != 0 {
            let a = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let na = closed[a] & mask;
            let mut others = mask & !(1u64 << a);
            while others != 0 {
                let b = others.trailing_zeros() as usize;
                others &= others - 1;
                if na & !(closed[b] & mask) == 0 {
                    continue 'masks;
                }
            }
        }
        let w: Vec<usize> = (0..n)
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| free[k])
            .collect();
        let profile = reduced_homology(&restrict(&delta, &w), FieldSpec::Rational)?;
        if profile.dims.iter().skip(2).any(|&d| d != 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// reg(S/I_{Δ(P)}): full Hochster sum when the complex (cone apexes removed)
/// is small; for larger Cohen-Macaulay complexes, the top nonzero h-entry.
/// When both routes run they must agree.
pub fn regularity_of_complement(p: &Poset) -> Result<usize> {
    let delta = order_complex(p)?;
    let apexes = cone_apexes(&delta);
    let free = delta.n_vertices() - apexes.len();
    let h = fh_vectors(&delta).h;
    let h_route = h.iter().rposition(|&x| x != 0).unwrap_or(0);
    if free <= HOCHSTER_VERTEX_CAP {
        let reg = hochster_betti(&delta, FieldSpec::Rational)?.reg();
        if is_cohen_macaulay(&delta, FieldSpec::Rational)? && reg != h_route {
            return Err(Error::InternalMismatch(format!(
                "hochster regularity {} disagrees with h-vector top {}",
                reg, h_route
            )));
        }
        return Ok(reg);
    }
    if is_cohen_macaulay(&delta, FieldSpec::Rational)? {
        return Ok(h_route);
    }
    Err(Error::SizeCapExceeded(format!(
        "{} non-apex vertices and not Cohen-Macaulay: regularity not computable",
        free
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{birkhoff, boolean, divisor, rank_fixed_ideals, remove_dual_ideal};
    use crate::poset::enumerate_posets;

    const Q: FieldSpec = FieldSpec::Rational;

    fn cx(labels: &[&str], facets: &[Vec<usize>]) -> SimplicialComplex {
        SimplicialComplex::from_facets(labels, facets).unwrap()
    }

    fn chain(n: usize) -> Poset {
        let labels: Vec<String> = (0..n).map(|i| format!("c{}", i)).collect();
        let covers: Vec<(String, String)> = (1..n)
            .map(|i| (format!("c{}", i - 1), format!("c{}", i)))
            .collect();
        Poset::from_covers(&labels, &covers).unwrap()
    }

    /// B_n with the dual order ideal of ranks >= k removed.
    fn boolean_truncated(n: usize, k: usize) -> Poset {
        let l = boolean(n).unwrap();
        let keep: Vec<usize> = (0..l.n())
            .filter(|&x| l.poset().rank_of_index(x) < k)
            .collect();
        l.poset().induced(&keep)
    }

    #[test]
    fn hochster_two_points() {
        let t = hochster_betti(&cx(&["a", "b"], &[vec![0], vec![1]]), Q).unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 2), 1);
        assert_eq!(t.entries().count(), 2);
    }

    #[test]
    fn hochster_four_cycle() {
        let delta = cx(
            &["a", "b", "c", "d"],
            &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        );
        let t = hochster_betti(&delta, Q).unwrap();
        // complete intersection of the two diagonals
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 2), 2);
        assert_eq!(t.get(2, 4), 1);
        assert_eq!(t.pd(), 2);
        assert_eq!(t.reg(), 2);
    }

    #[test]
    fn hochster_order_complex_b2() {
        let l = boolean(2).unwrap();
        let t = hochster_betti(&order_complex(l.poset()).unwrap(), Q).unwrap();
        assert_eq!(t.pd(), 1);
        assert_eq!(t.reg(), 1);
        assert_eq!(t.get(1, 2), 1);
    }

    #[test]
    fn betti_json_roundtrip() {
        let delta = cx(&["a", "b"], &[vec![0], vec![1]]);
        let t = hochster_betti(&delta, Q).unwrap();
        let json = t.to_json();
        assert!(json.starts_with("{\"num_vars\":2,\"entries\":[{\"i\":0,"));
        assert_eq!(BettiTable::from_json(&json).unwrap(), t);
    }

    #[test]
    fn koszul_direct_chain_is_polynomial_ring() {
        let mut q = GradedQuotient::straightening(&chain(3)).unwrap();
        let t = koszul_betti_direct(&mut q).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1)]);
    }

    #[test]
    fn koszul_direct_b2_hypersurface() {
        let l = boolean(2).unwrap();
        let mut q = GradedQuotient::straightening(l.poset()).unwrap();
        let t = koszul_betti_direct(&mut q).unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 2), 1);
        assert_eq!(t.pd(), 1);
    }

    #[test]
    fn koszul_matches_hochster_on_monomial_quotients() {
        let samples = vec![
            cx(&["a", "b"], &[vec![0], vec![1]]),
            cx(
                &["a", "b", "c", "d"],
                &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
            ),
            cx(&["a", "b", "c", "d"], &[vec![0, 1, 2], vec![2, 3]]),
            cx(&["a", "b", "c", "d", "e"], &[vec![0, 1], vec![2, 3], vec![4]]),
        ];
        for delta in samples {
            let expect = hochster_betti(&delta, Q).unwrap();
            let mut q = GradedQuotient::stanley_reisner(delta);
            let got = koszul_betti_direct(&mut q).unwrap();
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn reduced_quotient_matches_full_invariants() {
        for l in [boolean(3).unwrap(), divisor(2, 1).unwrap()] {
            for ideal in rank_fixed_ideals(&l) {
                if ideal.contains(&l, l.bottom()) {
                    continue;
                }
                let comp = remove_dual_ideal(&l, &ideal);
                let mut full = GradedQuotient::straightening(&comp).unwrap();
                let mut red = GradedQuotient::straightening_reduced(&comp).unwrap();
                let a = ring_invariants_of(&mut full, FieldSpec::Rational).unwrap();
                let b = ring_invariants_of(&mut red, FieldSpec::Rational).unwrap();
                assert_eq!(a.cm, b.cm);
                assert_eq!(a.cm_type, b.cm_type);
                assert_eq!(a.gorenstein, b.gorenstein);
                assert_eq!(a.level, b.level);
                assert_eq!(a.reg, b.reg);
                assert_eq!(a.dim - a.depth, b.dim - b.depth);
            }
        }
    }

    #[test]
    fn artinian_matches_direct_on_boolean3() {
        let l = boolean(3).unwrap();
        let mut q = GradedQuotient::straightening(l.poset()).unwrap();
        let direct = koszul_betti_direct(&mut q).unwrap();
        let reduced = koszul_betti_artinian(&mut q, 11).unwrap();
        assert_eq!(direct, reduced);
    }

    #[test]
    fn artinian_matches_direct_on_cm_monomial_quotient() {
        let delta = cx(
            &["a", "b", "c", "d"],
            &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        );
        let mut q = GradedQuotient::stanley_reisner(delta);
        let direct = koszul_betti_direct(&mut q).unwrap();
        let reduced = koszul_betti_artinian(&mut q, 23).unwrap();
        assert_eq!(direct, reduced);
    }

    #[test]
    fn boolean3_minus_top_gorenstein() {
        let p = boolean_truncated(3, 3);
        assert_eq!(p.n(), 7);
        let inv = ring_invariants(&p, Q).unwrap();
        assert!(inv.cm);
        assert!(inv.gorenstein);
        assert_eq!(inv.cm_type, 1);
        assert_eq!(inv.depth, inv.dim);
        assert_eq!(inv.pd, 7 - inv.dim);
    }

    #[test]
    fn chain_ring_invariants() {
        let inv = ring_invariants(&chain(4), Q).unwrap();
        assert_eq!(inv.dim, 4);
        assert_eq!(inv.depth, 4);
        assert_eq!(inv.pd, 0);
        assert_eq!(inv.reg, 0);
        assert!(inv.gorenstein && inv.level && inv.cm);
        assert_eq!(inv.cm_type, 1);
    }

    #[test]
    fn boston_negative_level_and_regularity() {
        // B_4 with ranks >= 2 removed: bottom plus four atoms
        let p = boolean_truncated(4, 2);
        assert_eq!(p.n(), 5);
        let inv = ring_invariants(&p, Q).unwrap();
        assert!(inv.cm);
        assert!(!inv.gorenstein);
        assert!(inv.level);
        assert_eq!(inv.reg, 1);
        assert_eq!(regularity_of_complement(&p).unwrap(), 1);
    }

    #[test]
    fn rank_del_cases() {
        // (3,3): B_3 truncated to rank <= 2 is Gorenstein
        let p33 = boolean_truncated(3, 3);
        assert!(ring_invariants(&p33, Q).unwrap().gorenstein);
        // (2,2): birkhoff of {a<b, c} truncated to rank <= 2 is not
        let src = Poset::from_covers(&["a", "b", "c"], &[("a", "b")]).unwrap();
        let l = birkhoff(&src).unwrap();
        let keep: Vec<usize> = (0..l.n())
            .filter(|&x| l.poset().rank_of_index(x) <= 2)
            .collect();
        let p22 = l.poset().induced(&keep);
        let inv = ring_invariants(&p22, Q).unwrap();
        assert!(inv.cm && !inv.gorenstein);
        // (1,2): birkhoff of {a<b, a<c} truncated is Gorenstein
        let src = Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
        let l = birkhoff(&src).unwrap();
        let keep: Vec<usize> = (0..l.n())
            .filter(|&x| l.poset().rank_of_index(x) <= 2)
            .collect();
        let p12 = l.poset().induced(&keep);
        assert!(ring_invariants(&p12, Q).unwrap().gorenstein);
    }

    #[test]
    fn chordality_cases() {
        let complete = ComparabilityGraph::from_edges(
            &["a", "b", "c", "d"],
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        );
        assert!(is_chordal(&complete));
        let b3 = boolean(3).unwrap();
        assert!(!is_chordal(&b3.poset().comparability_graph()));
        for n in 1..=4 {
            let l = divisor(1, n).unwrap();
            assert!(is_chordal(&l.poset().comparability_graph()), "D_2*3^{}", n);
        }
        // plain 4-cycle
        let c4 = ComparabilityGraph::from_edges(
            &["a", "b", "c", "d"],
            &[(0, 1), (1, 2), (2, 3), (3, 0)],
        );
        assert!(!is_chordal(&c4));
    }

    #[test]
    fn linear_resolution_routes_agree() {
        for n in 1..=5 {
            for p in enumerate_posets(n).unwrap() {
                if !is_distributive_type(&p) {
                    continue;
                }
                assert_eq!(
                    has_linear_resolution(&p).unwrap(),
                    has_linear_resolution_betti_route(&p).unwrap(),
                    "covers {:?}",
                    p.covers()
                );
            }
        }
    }

    #[test]
    fn figure2_has_linear_resolution() {
        let p = Poset::parse(include_str!("../fixtures/figure2.poset")).unwrap();
        assert!(is_distributive_type(&p));
        assert!(has_linear_resolution(&p).unwrap());
    }

    #[test]
    fn b3_no_linear_resolution() {
        let l = boolean(3).unwrap();
        assert!(!has_linear_resolution(l.poset()).unwrap());
        assert!(!has_linear_resolution_betti_route(l.poset()).unwrap());
    }

    #[test]
    fn regularity_cases() {
        assert_eq!(regularity_of_complement(&chain(4)).unwrap(), 0);
        let p = boolean_truncated(4, 3);
        assert_eq!(regularity_of_complement(&p).unwrap(), 2);
    }

    #[test]
    fn regularity_b5_by_h_route() {
        // 26 vertices: past the Hochster cap, certified Cohen-Macaulay
        let p = boolean_truncated(5, 4);
        assert_eq!(p.n(), 26);
        assert_eq!(regularity_of_complement(&p).unwrap(), 3);
    }

    #[test]
    fn semicontinuity_and_reg_pd_transfer() {
        for n in 1..=5 {
            for p in enumerate_posets(n).unwrap() {
                if !is_distributive_type(&p) {
                    continue;
                }
                let initial = hochster_betti(&order_complex(&p).unwrap(), Q).unwrap();
                let mut q = GradedQuotient::straightening(&p).unwrap();
                let actual = koszul_betti_direct(&mut q).unwrap();
                for (i, j, b) in actual.entries() {
                    assert!(initial.get(i, j) >= b, "semicontinuity at ({}, {})", i, j);
                }
                assert_eq!(initial.reg(), actual.reg());
                assert_eq!(initial.pd(), actual.pd());
            }
        }
    }

    #[test]
    fn divisor_minus_ideal_invariants_consistent() {
        // the non-CM complement from the divisor lattice goes through the
        // direct route and must report depth < dim
        let l = divisor(2, 2).unwrap();
        let six = l.poset().index_of("6").unwrap();
        let ideal = crate::lattice::DualOrderIdeal::generated_by(&l, &[six]);
        let rest = remove_dual_ideal(&l, &ideal);
        let inv = ring_invariants(&rest, Q).unwrap();
        assert!(!inv.cm);
        assert!(inv.depth < inv.dim);
    }

    #[test]
    fn rank_fixed_complements_of_b3_all_level() {
        let l = boolean(3).unwrap();
        for ideal in rank_fixed_ideals(&l) {
            let rest = remove_dual_ideal(&l, &ideal);
            if rest.is_empty() {
                continue;
            }
            let inv = ring_invariants(&rest, Q).unwrap();
            assert!(inv.level, "minimal elements {:?}", ideal.minimal_elements());
        }
    }
}

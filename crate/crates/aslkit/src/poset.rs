//! Finite posets: construction from cover relations, closure, ranks, chains,
//! intervals, comparability graphs, antichain-sum recognition and exhaustive
//! enumeration up to isomorphism.
//!
//! Elements are opaque string labels indexed by position; every algorithm
//! works on indices so that results are isomorphism-invariant.

use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Square boolean matrix backed by u64 blocks, one row per element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitMat {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl BitMat {
    pub fn new(n: usize) -> Self {
        let stride = n.div_ceil(64).max(1);
        BitMat { n, stride, bits: vec![0; stride * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.stride + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.bits[i * self.stride + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    /// OR row `src` into row `dst`.
    fn or_row(&mut self, dst: usize, src: usize) {
        if dst == src {
            return;
        }
        for k in 0..self.stride {
            let s = self.bits[src * self.stride + k];
            self.bits[dst * self.stride + k] |= s;
        }
    }

}

/// A finite partially ordered set.
///
/// `covers` is the irredundant Hasse relation, `leq` its reflexive-transitive
/// closure. Values are immutable after construction.
#[derive(Debug, Clone)]
pub struct Poset {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    leq: BitMat,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.covers == other.covers
    }
}
impl Eq for Poset {}

impl Poset {
    /// Build a poset from labelled cover pairs. Redundant (transitively
    /// implied) covers are accepted and stripped.
    pub fn from_covers<S: AsRef<str>>(labels: &[S], cover_pairs: &[(S, S)]) -> Result<Poset> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        for (k, l) in labels.iter().enumerate() {
            if labels[..k].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let idx = |s: &str| -> Result<usize> {
            labels
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| Error::UnknownLabel(s.to_string()))
        };
        let mut pairs = Vec::with_capacity(cover_pairs.len());
        for (a, b) in cover_pairs {
            pairs.push((idx(a.as_ref())?, idx(b.as_ref())?));
        }
        Self::from_cover_indices(labels, &pairs)
    }

    pub fn from_cover_indices(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        let mut leq = BitMat::new(n);
        for i in 0..n {
            leq.set(i, i, true);
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::UnknownLabel(format!("index {}", a.max(b))));
            }
            leq.set(a, b, true);
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if i != k && leq.get(i, k) {
                    leq.or_row(i, k);
                }
            }
        }
        // antisymmetry
        for i in 0..n {
            for j in 0..n {
                if i != j && leq.get(i, j) && leq.get(j, i) {
                    return Err(Error::CycleDetected);
                }
            }
        }
        Ok(Self::from_leq(labels, leq))
    }

    /// Build from a closed order matrix (assumed reflexive, transitive,
    /// antisymmetric); recomputes the irredundant cover set.
    pub(crate) fn from_leq(labels: Vec<String>, leq: BitMat) -> Poset {
        let n = labels.len();
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && leq.get(a, b) {
                    let mut is_cover = true;
                    for c in 0..n {
                        if c != a && c != b && leq.get(a, c) && leq.get(c, b) {
                            is_cover = false;
                            break;
                        }
                    }
                    if is_cover {
                        covers.push((a, b));
                    }
                }
            }
        }
        covers.sort_unstable();
        Poset { labels, covers, leq }
    }

    pub fn empty() -> Poset {
        Poset { labels: Vec::new(), covers: Vec::new(), leq: BitMat::new(0) }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq.get(a, b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq.get(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq.get(a, b) || self.leq.get(b, a)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&x| (0..self.n()).all(|y| y == x || !self.lt(y, x)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&x| (0..self.n()).all(|y| y == x || !self.lt(x, y)))
            .collect()
    }

    /// Unique minimal element, if there is one.
    pub fn bottom(&self) -> Option<usize> {
        let m = self.minimal_elements();
        if m.len() == 1 {
            Some(m[0])
        } else {
            None
        }
    }

    pub fn top(&self) -> Option<usize> {
        let m = self.maximal_elements();
        if m.len() == 1 {
            Some(m[0])
        } else {
            None
        }
    }

    /// Length of the longest chain ending at `x` (minimal elements have rank 0).
    pub fn rank_of_index(&self, x: usize) -> usize {
        self.ranks()[x]
    }

    pub fn rank_of(&self, label: &str) -> Result<usize> {
        Ok(self.rank_of_index(self.index_of(label)?))
    }

    /// All element ranks, computed by longest-chain dynamic programming.
    pub fn ranks(&self) -> Vec<usize> {
        let n = self.n();
        let order = self.topological_order();
        let mut rank = vec![0usize; n];
        for &x in &order {
            for &(a, b) in &self.covers {
                if b == x {
                    rank[x] = rank[x].max(rank[a] + 1);
                }
            }
        }
        rank
    }

    fn coranks(&self) -> Vec<usize> {
        let n = self.n();
        let order = self.topological_order();
        let mut co = vec![0usize; n];
        for &x in order.iter().rev() {
            for &(a, b) in &self.covers {
                if a == x {
                    co[x] = co[x].max(co[b] + 1);
                }
            }
        }
        co
    }

    /// rank(P) = (largest chain cardinality) - 1.
    pub fn rank(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyPoset);
        }
        Ok(self.ranks().into_iter().max().unwrap())
    }

    fn topological_order(&self) -> Vec<usize> {
        let n = self.n();
        let mut order: Vec<usize> = (0..n).collect();
        // leq row popcount descending = number of elements above; minimal first.
        let above: Vec<usize> =
            (0..n).map(|i| (0..n).filter(|&j| self.lt(i, j)).count()).collect();
        order.sort_by_key(|&i| (n - above[i], i));
        order
    }

    /// True iff all maximal chains have the same cardinality.
    pub fn is_pure(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptyPoset);
        }
        let d = self.rank()?;
        let ranks = self.ranks();
        let coranks = self.coranks();
        Ok((0..self.n()).all(|x| ranks[x] + coranks[x] == d))
    }

    /// All maximal chains, each listed bottom-up as element indices.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut ups: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.covers {
            ups[a].push(b);
        }
        let mut out = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        fn dfs(
            x: usize,
            ups: &[Vec<usize>],
            stack: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            stack.push(x);
            if ups[x].is_empty() {
                out.push(stack.clone());
            } else {
                for &y in &ups[x] {
                    dfs(y, ups, stack, out);
                }
            }
            stack.pop();
        }
        for x in self.minimal_elements() {
            dfs(x, &ups, &mut stack, &mut out);
        }
        out
    }

    /// Induced subposet on the given element indices (kept in the given order).
    pub fn induced(&self, subset: &[usize]) -> Poset {
        let labels: Vec<String> = subset.iter().map(|&i| self.labels[i].clone()).collect();
        let m = subset.len();
        let mut leq = BitMat::new(m);
        for (i, &a) in subset.iter().enumerate() {
            for (j, &b) in subset.iter().enumerate() {
                if self.leq(a, b) {
                    leq.set(i, j, true);
                }
            }
        }
        Poset::from_leq(labels, leq)
    }

    /// The interval [a, b] = { x : a <= x <= b } as an induced subposet.
    pub fn interval(&self, a: &str, b: &str) -> Result<Poset> {
        let (ia, ib) = (self.index_of(a)?, self.index_of(b)?);
        self.interval_by_index(ia, ib)
    }

    pub fn interval_by_index(&self, a: usize, b: usize) -> Result<Poset> {
        if !self.leq(a, b) {
            return Err(Error::NotComparable(
                self.labels[a].clone(),
                self.labels[b].clone(),
            ));
        }
        let subset: Vec<usize> =
            (0..self.n()).filter(|&x| self.leq(a, x) && self.leq(x, b)).collect();
        Ok(self.induced(&subset))
    }

    /// Upward-closed subposet { x : x >= a }.
    pub fn filter_of(&self, a: usize) -> Vec<usize> {
        (0..self.n()).filter(|&x| self.leq(a, x)).collect()
    }

    /// True iff P is an ordinal sum of antichains. The three equivalent
    /// characterizations (comparability condition, rank-level condition,
    /// explicit decomposition) are computed independently and must agree.
    pub fn is_sum_of_antichains(&self) -> bool {
        let a = self.antichain_sum_by_pairs();
        let b = self.antichain_sum_by_ranks();
        let c = self.antichain_sum_by_decomposition();
        assert_eq!(a, b, "antichain-sum characterizations disagree (pairs vs ranks)");
        assert_eq!(b, c, "antichain-sum characterizations disagree (ranks vs decomposition)");
        c
    }

    /// Condition (i): whenever p1 < p2, every q is comparable to p1 or p2.
    pub fn antichain_sum_by_pairs(&self) -> bool {
        let n = self.n();
        for p1 in 0..n {
            for p2 in 0..n {
                if self.lt(p1, p2) {
                    for q in 0..n {
                        if !self.comparable(q, p1) && !self.comparable(q, p2) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Condition (ii): pure, and rank(p) < rank(q) implies p < q.
    pub fn antichain_sum_by_ranks(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        if !self.is_pure().unwrap() {
            return false;
        }
        let ranks = self.ranks();
        let n = self.n();
        for p in 0..n {
            for q in 0..n {
                if ranks[p] < ranks[q] && !self.lt(p, q) {
                    return false;
                }
            }
        }
        true
    }

    /// Condition (iii): peel minimal levels; each level must lie below every
    /// remaining element.
    pub fn antichain_sum_by_decomposition(&self) -> bool {
        let mut remaining: Vec<usize> = (0..self.n()).collect();
        while !remaining.is_empty() {
            let level: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&x| remaining.iter().all(|&y| y == x || !self.lt(y, x)))
                .collect();
            let rest: Vec<usize> =
                remaining.iter().copied().filter(|x| !level.contains(x)).collect();
            for &p in &level {
                for &q in &rest {
                    if !self.lt(p, q) {
                        return false;
                    }
                }
            }
            remaining = rest;
        }
        true
    }

    pub fn comparability_graph(&self) -> ComparabilityGraph {
        let n = self.n();
        let mut adj = BitMat::new(n);
        for a in 0..n {
            for b in 0..n {
                if a != b && self.comparable(a, b) {
                    adj.set(a, b, true);
                }
            }
        }
        ComparabilityGraph { labels: self.labels.clone(), adj }
    }

    /// Deterministic total order refining <=: sort by (rank, input index).
    pub fn linear_extension(&self) -> Vec<usize> {
        let ranks = self.ranks();
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&i| (ranks[i], i));
        order
    }

    /// Minimal elements of { z : z >= a and z >= b }.
    pub fn minimal_upper_bounds(&self, a: usize, b: usize) -> Vec<usize> {
        let ubs: Vec<usize> =
            (0..self.n()).filter(|&z| self.leq(a, z) && self.leq(b, z)).collect();
        ubs.iter()
            .copied()
            .filter(|&z| ubs.iter().all(|&w| w == z || !self.lt(w, z)))
            .collect()
    }

    pub fn maximal_lower_bounds(&self, a: usize, b: usize) -> Vec<usize> {
        let lbs: Vec<usize> =
            (0..self.n()).filter(|&z| self.leq(z, a) && self.leq(z, b)).collect();
        lbs.iter()
            .copied()
            .filter(|&z| lbs.iter().all(|&w| w == z || !self.lt(z, w)))
            .collect()
    }

    /// Canonical text serialization; `parse` of the output is the identity.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        s.push_str("elements:");
        for l in &self.labels {
            let _ = write!(s, " {}", l);
        }
        s.push('\n');
        s.push_str("covers:");
        for &(a, b) in &self.covers {
            let _ = write!(s, " {}<{}", self.labels[a], self.labels[b]);
        }
        s.push('\n');
        s
    }

    /// Parse the whitespace-separated poset text format. Lines starting with
    /// `#` are comments; a leading `kind:` line (lattice files) is ignored.
    pub fn parse(text: &str) -> Result<Poset> {
        let mut labels: Option<Vec<String>> = None;
        let mut covers: Vec<(String, String)> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with("kind:") {
                continue;
            }
            if let Some(rest) = line.strip_prefix("elements:") {
                labels = Some(rest.split_whitespace().map(String::from).collect());
            } else if let Some(rest) = line.strip_prefix("covers:") {
                for tok in rest.split_whitespace() {
                    let mut it = tok.splitn(2, '<');
                    let a = it.next().unwrap_or("");
                    let b = it.next().ok_or_else(|| {
                        Error::Parse(format!("bad cover token `{}`", tok))
                    })?;
                    covers.push((a.to_string(), b.to_string()));
                }
            } else {
                return Err(Error::Parse(format!("unrecognized line `{}`", line)));
            }
        }
        let labels = labels.ok_or_else(|| Error::Parse("missing `elements:` line".into()))?;
        Poset::from_covers(&labels, &covers)
    }
}

/// Graph on the poset elements joining every comparable pair.
#[derive(Debug, Clone)]
pub struct ComparabilityGraph {
    labels: Vec<String>,
    adj: BitMat,
}

impl ComparabilityGraph {
    pub fn from_edges<S: AsRef<str>>(labels: &[S], edges: &[(usize, usize)]) -> ComparabilityGraph {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut adj = BitMat::new(labels.len());
        for &(a, b) in edges {
            if a != b {
                adj.set(a, b, true);
                adj.set(b, a, true);
            }
        }
        ComparabilityGraph { labels, adj }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.adj.get(a, b)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n() {
            for b in a + 1..self.n() {
                if self.adj.get(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, a: usize) -> Vec<usize> {
        (0..self.n()).filter(|&b| self.has_edge(a, b)).collect()
    }

    /// Complement graph on the same vertices.
    pub fn complement(&self) -> ComparabilityGraph {
        let mut adj = BitMat::new(self.n());
        for a in 0..self.n() {
            for b in 0..self.n() {
                if a != b && !self.adj.get(a, b) {
                    adj.set(a, b, true);
                }
            }
        }
        ComparabilityGraph { labels: self.labels.clone(), adj }
    }
}

/// Hard size cap for exhaustive poset enumeration.
pub const ENUMERATION_CAP: usize = 7;

/// All isomorphism classes of n-element posets, each exactly once, in a
/// deterministic order (sorted canonical encodings). Labels are `e0..`.
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(Error::SizeCapExceeded(format!(
            "poset enumeration supports 1..={}, got {}",
            ENUMERATION_CAP, n
        )));
    }
    // Strict order matrices with i < j only for i < j (a natural labelling);
    // every poset admits one, so scanning all transitive upper-triangular
    // relations and canonicalizing hits every isomorphism class.
    let npairs = n * (n - 1) / 2;
    let mut pair_bit = vec![[0usize; 8]; 8];
    {
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                pair_bit[i][j] = k;
                k += 1;
            }
        }
    }
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    for mask in 0u32..(1u32 << npairs) {
        // rows[i] = bitset over j of i < j
        let mut rows = [0u8; 8];
        for i in 0..n {
            for j in i + 1..n {
                if mask >> pair_bit[i][j] & 1 == 1 {
                    rows[i] |= 1 << j;
                }
            }
        }
        // transitivity: i<j implies rows[i] superset rows[j]
        let mut ok = true;
        'outer: for i in 0..n {
            for j in i + 1..n {
                if rows[i] >> j & 1 == 1 && rows[i] & rows[j] != rows[j] {
                    ok = false;
                    break 'outer;
                }
            }
        }
        if ok {
            seen.insert(canonical_encoding(n, &rows));
        }
    }
    let mut out = Vec::with_capacity(seen.len());
    for enc in seen {
        let labels: Vec<String> = (0..n).map(|i| format!("e{}", i)).collect();
        let mut pairs = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if enc[k] == 1 {
                    pairs.push((i, j));
                }
                k += 1;
            }
        }
        out.push(Poset::from_cover_indices(labels, &pairs)?);
    }
    Ok(out)
}

/// Lexicographically minimal column-encoding of the strict order matrix over
/// all relabelings by linear extensions. An isomorphism invariant.
fn canonical_encoding(n: usize, rows: &[u8; 8]) -> Vec<u8> {
    let lt = |a: usize, b: usize| rows[a] >> b & 1 == 1;
    let mut best: Option<Vec<u8>> = None;
    let mut placed: Vec<usize> = Vec::with_capacity(n);
    let mut enc: Vec<u8> = Vec::with_capacity(n * (n - 1) / 2);
    fn rec(
        n: usize,
        lt: &dyn Fn(usize, usize) -> bool,
        placed: &mut Vec<usize>,
        enc: &mut Vec<u8>,
        best: &mut Option<Vec<u8>>,
    ) {
        if placed.len() == n {
            if best.as_ref().map_or(true, |b| &*enc < b) {
                *best = Some(enc.clone());
            }
            return;
        }
        for x in 0..n {
            if placed.contains(&x) {
                continue;
            }
            // only minimal among unplaced (so relabeling is a linear extension)
            if (0..n).any(|y| !placed.contains(&y) && y != x && lt(y, x)) {
                continue;
            }
            let base = enc.len();
            for &p in placed.iter() {
                enc.push(u8::from(lt(p, x)));
            }
            // prefix pruning against current best
            let keep = match best {
                Some(b) => enc[..] <= b[..enc.len()],
                None => true,
            };
            if keep {
                placed.push(x);
                rec(n, lt, placed, enc, best);
                placed.pop();
            }
            enc.truncate(base);
        }
    }
    rec(n, &lt, &mut placed, &mut enc, &mut best);
    best.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Poset {
        let labels: Vec<String> = (0..n).map(|i| format!("c{}", i)).collect();
        let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_cover_indices(labels, &pairs).unwrap()
    }

    fn antichain(n: usize) -> Poset {
        let labels: Vec<String> = (0..n).map(|i| format!("a{}", i)).collect();
        Poset::from_cover_indices(labels, &[]).unwrap()
    }

    #[test]
    fn singleton() {
        let p = Poset::from_covers(&["a"], &[]).unwrap();
        assert_eq!(p.n(), 1);
        assert!(p.leq(0, 0));
        assert_eq!(p.covers(), &[]);
    }

    #[test]
    fn transitive_cover_removed() {
        let p = Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")])
            .unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert!(p.lt(0, 2));
    }

    #[test]
    fn cycle_detected() {
        let err = Poset::from_covers(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert_eq!(err, Error::CycleDetected);
    }

    #[test]
    fn unknown_label() {
        let err = Poset::from_covers(&["a"], &[("a", "z")]).unwrap_err();
        assert!(matches!(err, Error::UnknownLabel(_)));
    }

    #[test]
    fn ranks_on_chain() {
        let p = chain(3);
        assert_eq!(p.rank_of("c2").unwrap(), 2);
        assert_eq!(p.rank().unwrap(), 2);
    }

    #[test]
    fn purity() {
        assert!(chain(4).is_pure().unwrap());
        // a<b<c plus a<d with d maximal: chains of cardinality 3 and 2
        let p = Poset::from_covers(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("a", "d")])
            .unwrap();
        assert!(!p.is_pure().unwrap());
        let chains = p.maximal_chains();
        let sizes: BTreeSet<usize> = chains.iter().map(|c| c.len()).collect();
        assert_eq!(sizes, BTreeSet::from([2, 3]));
    }

    #[test]
    fn purity_matches_maximal_chain_enumeration() {
        for p in enumerate_posets(5).unwrap() {
            let by_chains = p
                .maximal_chains()
                .iter()
                .map(|c| c.len())
                .collect::<BTreeSet<_>>()
                .len()
                == 1;
            assert_eq!(p.is_pure().unwrap(), by_chains, "{}", p.serialize());
        }
    }

    #[test]
    fn interval_singleton_and_diamond() {
        let p = chain(3);
        let s = p.interval("c1", "c1").unwrap();
        assert_eq!(s.n(), 1);
        // B_3 diamond interval
        let b3 = crate::lattice::boolean(3).unwrap();
        let i = b3.poset().interval("{}", "{1,2}").unwrap();
        assert_eq!(i.n(), 4);
        assert_eq!(i.maximal_chains().len(), 2);
    }

    #[test]
    fn interval_not_comparable() {
        let p = antichain(2);
        assert!(matches!(
            p.interval("a0", "a1"),
            Err(Error::NotComparable(_, _))
        ));
    }

    #[test]
    fn antichain_sum_cases() {
        assert!(antichain(4).is_sum_of_antichains());
        assert!(chain(5).is_sum_of_antichains());
        // p1 < p2 with q incomparable to both
        let p = Poset::from_covers(&["p1", "p2", "q"], &[("p1", "p2")]).unwrap();
        assert!(!p.is_sum_of_antichains());
    }

    #[test]
    fn comparability_graph_of_chain_and_antichain() {
        let g = chain(4).comparability_graph();
        assert_eq!(g.edges().len(), 6);
        let g = antichain(4).comparability_graph();
        assert!(g.edges().is_empty());
    }

    #[test]
    fn linear_extension_refines_order() {
        for p in enumerate_posets(5).unwrap() {
            let ext = p.linear_extension();
            let pos: Vec<usize> = {
                let mut pos = vec![0; p.n()];
                for (k, &x) in ext.iter().enumerate() {
                    pos[x] = k;
                }
                pos
            };
            for a in 0..p.n() {
                for b in 0..p.n() {
                    if p.lt(a, b) {
                        assert!(pos[a] < pos[b]);
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        // A000112: unlabeled posets on n elements.
        let expected = [1usize, 2, 5, 16, 63, 318, 2045];
        for (n, &want) in expected.iter().enumerate() {
            let n = n + 1;
            if n > 5 {
                continue; // larger sizes checked in integration tests
            }
            assert_eq!(enumerate_posets(n).unwrap().len(), want, "n={}", n);
        }
    }

    #[test]
    fn enumeration_matches_bruteforce_isomorphism_rejection() {
        // independent oracle: dedupe by minimum over all n! relabelings
        fn brute_count(n: usize) -> usize {
            let npairs = n * (n - 1) / 2;
            let mut classes: BTreeSet<Vec<bool>> = BTreeSet::new();
            let perms = permutations(n);
            for mask in 0u32..(1u32 << npairs) {
                let mut lt = vec![vec![false; n]; n];
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        lt[i][j] = mask >> k & 1 == 1;
                        k += 1;
                    }
                }
                let mut ok = true;
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            if lt[a][b] && lt[b][c] && !lt[a][c] {
                                ok = false;
                            }
                        }
                    }
                }
                if !ok {
                    continue;
                }
                let mut best: Option<Vec<bool>> = None;
                for perm in &perms {
                    let mut enc = Vec::with_capacity(n * n);
                    for a in 0..n {
                        for b in 0..n {
                            enc.push(lt[perm[a]][perm[b]]);
                        }
                    }
                    if best.as_ref().is_none_or(|b| &enc < b) {
                        best = Some(enc);
                    }
                }
                classes.insert(best.unwrap());
            }
            classes.len()
        }
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 1 {
                return vec![vec![0]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for k in 0..n {
                    let mut q = p.clone();
                    q.insert(k, n - 1);
                    out.push(q);
                }
            }
            out
        }
        for n in 1..=5 {
            assert_eq!(enumerate_posets(n).unwrap().len(), brute_count(n), "n={}", n);
        }
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(enumerate_posets(8), Err(Error::SizeCapExceeded(_))));
    }

    #[test]
    fn closure_idempotent_on_enumerated() {
        for p in enumerate_posets(4).unwrap() {
            let again =
                Poset::from_cover_indices(p.labels().to_vec(), p.covers()).unwrap();
            assert_eq!(p.covers(), again.covers());
            for a in 0..p.n() {
                for b in 0..p.n() {
                    assert_eq!(p.leq(a, b), again.leq(a, b));
                }
            }
        }
    }

    #[test]
    fn roundtrip_serialize_parse() {
        for p in enumerate_posets(4).unwrap() {
            let text = p.serialize();
            let q = Poset::parse(&text).unwrap();
            assert_eq!(text, q.serialize());
        }
    }

    #[test]
    fn parse_with_comments() {
        let p = Poset::parse("# a comment\nelements: x y\ncovers: x<y\n").unwrap();
        assert_eq!(p.n(), 2);
        assert!(p.lt(0, 1));
    }

    #[test]
    fn minimal_upper_bounds_basic() {
        let p = chain(3);
        assert_eq!(p.minimal_upper_bounds(0, 2), vec![2]);
        let a = antichain(2);
        assert!(a.minimal_upper_bounds(0, 1).is_empty());
    }
}

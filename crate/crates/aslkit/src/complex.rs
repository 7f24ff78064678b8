//! Simplicial complexes stored by their inclusion-maximal facets: order
//! complexes, f/h-vectors, reduced Euler characteristic, links and deletions,
//! barycentric subdivision and the co-skeleton complexes used in the boolean
//! vertex-decomposability argument.

use crate::poset::Poset;
use crate::{Error, Result};
use std::collections::BTreeSet;

/// A simplicial complex on a labelled vertex set. The complex consisting of
/// only the empty face is representable (no vertices, one empty facet); the
/// void complex is rejected by constructors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplicialComplex {
    vertex_labels: Vec<String>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Normalizing constructor: facets are sorted, deduplicated, and dominated
    /// faces dropped. Vertices are the union of the facets, in first-occurrence
    /// order of `vertex_labels`.
    pub fn from_facets<S: AsRef<str>>(
        vertex_labels: &[S],
        facets: &[Vec<usize>],
    ) -> Result<SimplicialComplex> {
        if facets.is_empty() {
            return Err(Error::BadArguments("void complex (no faces) rejected".into()));
        }
        let vertex_labels: Vec<String> =
            vertex_labels.iter().map(|s| s.as_ref().to_string()).collect();
        for (k, l) in vertex_labels.iter().enumerate() {
            if vertex_labels[..k].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut norm: Vec<Vec<usize>> = Vec::new();
        for f in facets {
            let mut f: Vec<usize> = f.clone();
            f.sort_unstable();
            f.dedup();
            if let Some(&v) = f.iter().find(|&&v| v >= vertex_labels.len()) {
                return Err(Error::UnknownLabel(format!("vertex index {}", v)));
            }
            norm.push(f);
        }
        // drop dominated facets
        let mut keep: Vec<Vec<usize>> = Vec::new();
        for f in &norm {
            if norm.iter().any(|g| g != f && is_subset(f, g))
                || keep.iter().any(|g| g == f)
            {
                continue;
            }
            keep.push(f.clone());
        }
        // restrict to vertices actually used, preserving label order
        let used: BTreeSet<usize> = keep.iter().flatten().copied().collect();
        let old_to_new: Vec<Option<usize>> = {
            let mut map = vec![None; vertex_labels.len()];
            for (new, &old) in used.iter().enumerate() {
                map[old] = Some(new);
            }
            map
        };
        let labels: Vec<String> =
            used.iter().map(|&v| vertex_labels[v].clone()).collect();
        let mut facets: Vec<Vec<usize>> = keep
            .into_iter()
            .map(|f| f.into_iter().map(|v| old_to_new[v].unwrap()).collect())
            .collect();
        facets.sort();
        Ok(SimplicialComplex { vertex_labels: labels, facets })
    }

    /// The complex { ∅ }.
    pub fn empty_complex() -> SimplicialComplex {
        SimplicialComplex { vertex_labels: Vec::new(), facets: vec![Vec::new()] }
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertex_labels[v]
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// dim Δ = max facet size - 1; the empty complex has dimension -1.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap()
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.len() as isize - 1 == d)
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        self.facets.iter().any(|g| is_subset(&f, g))
    }

    /// All faces including the empty face, sorted by (size, lex).
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in &self.facets {
            for mask in 0u64..(1u64 << f.len()) {
                let sub: Vec<usize> = f
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                set.insert(sub);
            }
        }
        let mut out: Vec<Vec<usize>> = set.into_iter().collect();
        out.sort_by(|a, b| (a.len(), a.clone()).cmp(&(b.len(), b.clone())));
        out
    }

    /// Faces of cardinality `k` (k = 0 gives the empty face).
    pub fn faces_of_size(&self, k: usize) -> Vec<Vec<usize>> {
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in &self.facets {
            if f.len() < k {
                continue;
            }
            subsets_of_size(f, k, &mut set);
        }
        set.into_iter().collect()
    }

    pub fn link(&self, face: &[usize]) -> Result<SimplicialComplex> {
        if !self.contains_face(face) {
            return Err(Error::FaceNotInComplex);
        }
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        let link_facets: Vec<Vec<usize>> = self
            .facets
            .iter()
            .filter(|g| is_subset(&f, g))
            .map(|g| g.iter().copied().filter(|v| !f.contains(v)).collect())
            .collect();
        SimplicialComplex::from_facets(&self.vertex_labels, &link_facets)
    }

    /// Δ - x: all faces avoiding the vertex x.
    pub fn deletion(&self, x: usize) -> SimplicialComplex {
        let del: Vec<Vec<usize>> = self
            .facets
            .iter()
            .map(|g| g.iter().copied().filter(|&v| v != x).collect())
            .collect();
        SimplicialComplex::from_facets(&self.vertex_labels, &del)
            .expect("deletion keeps at least the empty face")
    }

    /// Order complex of the poset of nonempty faces ordered by inclusion.
    pub fn barycentric_subdivision(&self) -> SimplicialComplex {
        let faces: Vec<Vec<usize>> =
            self.faces().into_iter().filter(|f| !f.is_empty()).collect();
        if faces.is_empty() {
            return SimplicialComplex::empty_complex();
        }
        let labels: Vec<String> = faces
            .iter()
            .map(|f| {
                let mems: Vec<&str> =
                    f.iter().map(|&v| self.vertex_label(v)).collect();
                format!("{{{}}}", mems.join(","))
            })
            .collect();
        let m = faces.len();
        let mut leq = crate::poset::BitMat::new(m);
        for a in 0..m {
            for b in 0..m {
                if is_subset(&faces[a], &faces[b]) {
                    leq.set(a, b, true);
                }
            }
        }
        let poset = Poset::from_leq(labels, leq);
        order_complex(&poset).expect("face poset of a nonvoid complex is nonempty")
    }

    /// One facet per line, vertices whitespace-separated; `#` comments.
    /// One facet per line, labels sorted within a line and lines sorted, so
    /// the output is a label-level canonical form.
    pub fn serialize(&self) -> String {
        let mut lines: Vec<String> = self
            .facets
            .iter()
            .map(|f| {
                let mut mems: Vec<&str> =
                    f.iter().map(|&v| self.vertex_label(v)).collect();
                mems.sort_unstable();
                mems.join(" ")
            })
            .collect();
        lines.sort_unstable();
        let mut s = lines.join("\n");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<SimplicialComplex> {
        let mut labels: Vec<String> = Vec::new();
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            let mut facet = Vec::new();
            for t in toks {
                let v = match labels.iter().position(|l| l == t) {
                    Some(v) => v,
                    None => {
                        labels.push(t.to_string());
                        labels.len() - 1
                    }
                };
                facet.push(v);
            }
            facets.push(facet);
        }
        if facets.is_empty() {
            return Err(Error::Parse("no facets in complex file".into()));
        }
        SimplicialComplex::from_facets(&labels, &facets)
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|v| b.contains(v))
}

fn subsets_of_size(f: &[usize], k: usize, out: &mut BTreeSet<Vec<usize>>) {
    fn rec(f: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if cur.len() == k {
            out.insert(cur.clone());
            return;
        }
        for i in start..f.len() {
            if f.len() - i < k - cur.len() {
                break;
            }
            cur.push(f[i]);
            rec(f, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(f, k, 0, &mut Vec::new(), out);
}

/// The order complex Δ(P): faces are the chains of P, facets the maximal chains.
pub fn order_complex(p: &Poset) -> Result<SimplicialComplex> {
    if p.is_empty() {
        return Err(Error::EmptyPoset);
    }
    let facets = p.maximal_chains();
    SimplicialComplex::from_facets(p.labels(), &facets)
}

/// f-vector, h-vector and reduced Euler characteristic, all exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FHVectors {
    /// (f_0, ..., f_{d-1})
    pub f: Vec<i64>,
    /// (h_0, ..., h_d)
    pub h: Vec<i64>,
    /// reduced Euler characteristic χ̃ = -1 + f_0 - f_1 + ...
    pub euler: i64,
}

/// Compute (f, h, χ̃) from the defining polynomial identity
/// Σ f_{i-1} (x-1)^{d-i} = Σ h_i x^{d-i}, with f_{-1} = 1.
pub fn fh_vectors(delta: &SimplicialComplex) -> FHVectors {
    let d = (delta.dim() + 1) as usize; // largest face cardinality
    let mut f = Vec::with_capacity(d);
    for i in 0..d {
        f.push(delta.faces_of_size(i + 1).len() as i64);
    }
    // accumulate coefficients of x^d .. x^0 of sum f_{i-1} (x-1)^{d-i}
    let mut coeffs = vec![0i128; d + 1]; // coeffs[k] multiplies x^{d-k}
    for i in 0..=d {
        let fi = if i == 0 { 1i128 } else { f[i - 1] as i128 };
        // (x-1)^{d-i} = sum_j C(d-i, j) x^{d-i-j} (-1)^j
        for j in 0..=(d - i) {
            let sign = if j % 2 == 0 { 1i128 } else { -1i128 };
            coeffs[i + j] += fi * binom((d - i) as i128, j as i128) * sign;
        }
    }
    let h: Vec<i64> = coeffs.iter().map(|&c| c as i64).collect();
    let mut euler: i64 = -1;
    for (i, &fi) in f.iter().enumerate() {
        euler += if i % 2 == 0 { fi } else { -fi };
    }
    FHVectors { f, h, euler }
}

fn binom(n: i128, k: i128) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Δ_{n,X}: facets are the (n-1)-subsets W of [n] with X not a subset of W.
pub fn skeleton_complex(n: usize, x: &[usize]) -> Result<SimplicialComplex> {
    if n < 2 {
        return Err(Error::BadArguments("skeleton complex needs n >= 2".into()));
    }
    if x.is_empty() || x.iter().any(|&v| v == 0 || v > n) {
        return Err(Error::BadArguments(
            "X must be a nonempty subset of {1..n}".into(),
        ));
    }
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut facets = Vec::new();
    for out in 1..=n {
        let w: Vec<usize> = (1..=n).filter(|&v| v != out).collect();
        if !x.iter().all(|v| w.contains(v)) {
            facets.push(w.iter().map(|&v| v - 1).collect());
        }
    }
    if facets.is_empty() {
        return Err(Error::BadArguments("X yields a void complex".into()));
    }
    SimplicialComplex::from_facets(&labels, &facets)
}

//! Exact sparse linear algebra over the rationals and small prime fields.
//!
//! Everything downstream (homology ranks, Hilbert functions, Koszul and
//! Hochster Betti numbers, Artinian reductions) runs through the incremental
//! row-echelon structure here. No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

/// Exact field operations needed by the elimination routines.
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Self;
    fn from_i64(v: i64) -> Self;
}

/// Arbitrary-precision rational scalar.
#[derive(Clone, PartialEq, Debug)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn from_int(v: i64) -> Rat {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl std::fmt::Display for Rat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Rat(&self.0 + &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Rat(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        Rat(-&self.0)
    }
    fn inv(&self) -> Self {
        Rat(self.0.recip())
    }
    fn from_i64(v: i64) -> Self {
        Rat::from_int(v)
    }
}

/// Prime field F_P for a small compile-time prime.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp<const P: u64>(pub u64);

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fp((self.0 + other.0) % P)
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(self.0 * other.0 % P)
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn inv(&self) -> Self {
        // P is prime and self nonzero: Fermat
        assert!(self.0 != 0, "division by zero in F_p");
        let mut base = self.0 % P;
        let mut e = P - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
    }
    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }
}

/// Coefficient field selector surfaced on the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum FieldSpec {
    /// characteristic zero
    Rational,
    /// F_p for p in {2, 3, 5}
    Prime(u32),
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "f{}", p),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<FieldSpec> {
        match s {
            "q" | "Q" | "rational" => Ok(FieldSpec::Rational),
            "f2" => Ok(FieldSpec::Prime(2)),
            "f3" => Ok(FieldSpec::Prime(3)),
            "f5" => Ok(FieldSpec::Prime(5)),
            other => Err(crate::Error::BadArguments(format!(
                "unsupported field `{}` (use q, f2, f3 or f5)",
                other
            ))),
        }
    }
}

/// Sparse vector: (column, coefficient) pairs sorted by column, no zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn sparse_from_entries<F: Field>(entries: impl IntoIterator<Item = (usize, F)>) -> SparseVec<F> {
    let mut map: std::collections::BTreeMap<usize, F> = Default::default();
    for (c, v) in entries {
        let slot = map.entry(c).or_insert_with(F::zero);
        *slot = slot.add(&v);
    }
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Incremental row-echelon accumulator.
///
/// In `full` mode the stored rows form a reduced echelon basis and `reduce`
/// returns a vector supported on non-pivot columns only (used for quotient
/// space projections); otherwise only forward elimination is performed
/// (sufficient for ranks and kernels).
pub struct Echelon<F: Field> {
    rows: Vec<SparseVec<F>>,
    pivot_of_col: HashMap<usize, usize>,
    full: bool,
}

impl<F: Field> Echelon<F> {
    pub fn new(full: bool) -> Echelon<F> {
        Echelon { rows: Vec::new(), pivot_of_col: HashMap::new(), full }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.pivot_of_col.keys().copied().collect();
        cols.sort_unstable();
        cols
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_of_col.contains_key(&col)
    }

    /// Eliminate pivot columns from `v`. In full mode every pivot column is
    /// cleared; otherwise only leading entries are chased.
    pub fn reduce(&self, v: SparseVec<F>) -> SparseVec<F> {
        let mut v = v;
        if self.full {
            // rows are mutually reduced: eliminating a pivot column only
            // introduces columns to its right, one left-to-right sweep works
            let mut k = 0;
            while k < v.len() {
                let col = v[k].0;
                if let Some(&r) = self.pivot_of_col.get(&col) {
                    let coef = v[k].1.clone();
                    v = axpy(&v, &coef.neg(), &self.rows[r]);
                    // the eliminated column vanished; continue from the same position
                    k = v.partition_point(|(c, _)| *c < col);
                } else {
                    k += 1;
                }
            }
            v
        } else {
            loop {
                let Some((col, coef)) = v.first().map(|(c, x)| (*c, x.clone())) else {
                    return v;
                };
                let Some(&r) = self.pivot_of_col.get(&col) else {
                    return v;
                };
                v = axpy(&v, &coef.neg(), &self.rows[r]);
            }
        }
    }

    /// Reduce and, if nonzero, adjoin as a new pivot row. Returns true when
    /// the rank grew.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let v = self.reduce(v);
        let Some((lead, coef)) = v.first().map(|(c, x)| (*c, x.clone())) else {
            return false;
        };
        // normalize to leading coefficient 1
        let inv = coef.inv();
        let row: SparseVec<F> =
            v.into_iter().map(|(c, x)| (c, x.mul(&inv))).collect();
        if self.full {
            // clear the new pivot column from existing rows
            for r in 0..self.rows.len() {
                if let Some(pos) = self.rows[r].iter().position(|(c, _)| *c == lead) {
                    let coef = self.rows[r][pos].1.clone().neg();
                    self.rows[r] = axpy(&self.rows[r], &coef, &row);
                }
            }
        }
        self.pivot_of_col.insert(lead, self.rows.len());
        self.rows.push(row);
        true
    }
}

/// v + c * w for sorted sparse vectors.
pub fn axpy<F: Field>(v: &SparseVec<F>, c: &F, w: &SparseVec<F>) -> SparseVec<F> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        match (v.get(i), w.get(j)) {
            (Some((cv, xv)), Some((cw, xw))) if cv == cw => {
                let x = xv.add(&c.mul(xw));
                if !x.is_zero() {
                    out.push((*cv, x));
                }
                i += 1;
                j += 1;
            }
            (Some((cv, xv)), Some((cw, _))) if cv < cw => {
                out.push((*cv, xv.clone()));
                i += 1;
            }
            (Some(_), Some((cw, xw))) => {
                let x = c.mul(xw);
                if !x.is_zero() {
                    out.push((*cw, x));
                }
                j += 1;
            }
            (Some((cv, xv)), None) => {
                out.push((*cv, xv.clone()));
                i += 1;
            }
            (None, Some((cw, xw))) => {
                let x = c.mul(xw);
                if !x.is_zero() {
                    out.push((*cw, x));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

pub fn scale<F: Field>(v: &SparseVec<F>, c: &F) -> SparseVec<F> {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(col, x)| (*col, c.mul(x))).collect()
}

/// Rank of the matrix whose rows are given.
pub fn rank_of_rows<F: Field>(rows: impl IntoIterator<Item = SparseVec<F>>) -> usize {
    let mut ech = Echelon::new(false);
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(usize, i64)]) -> SparseVec<Rat> {
        entries.iter().map(|&(c, x)| (c, Rat::from_int(x))).collect()
    }

    #[test]
    fn rank_simple() {
        let rows = vec![v(&[(0, 1), (1, 2)]), v(&[(0, 2), (1, 4)]), v(&[(1, 1)])];
        assert_eq!(rank_of_rows(rows), 2);
    }

    #[test]
    fn rank_identity() {
        let rows: Vec<SparseVec<Rat>> = (0..5).map(|i| v(&[(i, 3)])).collect();
        assert_eq!(rank_of_rows(rows), 5);
    }

    #[test]
    fn full_reduction_clears_pivot_columns() {
        let mut ech = Echelon::new(true);
        ech.insert(v(&[(0, 1), (2, 1)]));
        ech.insert(v(&[(1, 1), (2, 3)]));
        let r = ech.reduce(v(&[(0, 2), (1, 1), (2, 5), (3, 7)]));
        assert!(r.iter().all(|(c, _)| !ech.is_pivot(*c)));
        assert_eq!(r, v(&[(3, 7)]));
    }

    #[test]
    fn fp_inverse() {
        let x: Fp<5> = Fp(3);
        assert_eq!(x.mul(&x.inv()).0, 1);
        let y: Fp<2> = Fp(1);
        assert_eq!(y.inv().0, 1);
    }

    #[test]
    fn rank_over_f2_differs_from_q() {
        // boundary-like matrix with determinant 2: full rank over Q, deficient over F_2
        let rows_q = vec![v(&[(0, 1), (1, 1)]), v(&[(0, 1), (1, -1)])];
        assert_eq!(rank_of_rows(rows_q), 2);
        let rows_f2: Vec<SparseVec<Fp<2>>> = vec![
            vec![(0, Fp(1)), (1, Fp(1))],
            vec![(0, Fp(1)), (1, Fp(1))],
        ];
        assert_eq!(rank_of_rows(rows_f2), 1);
    }

    #[test]
    fn axpy_cancellation() {
        let a = v(&[(0, 1), (1, 2)]);
        let b = v(&[(1, 1)]);
        let r = axpy(&a, &Rat::from_int(-2), &b);
        assert_eq!(r, v(&[(0, 1)]));
    }

    proptest::proptest! {
        #[test]
        fn rank_invariant_under_row_scaling(rows in proptest::collection::vec(
            proptest::collection::vec((0usize..6, -4i64..5), 0..6), 1..6)) {
            let base: Vec<SparseVec<Rat>> = rows.iter()
                .map(|r| sparse_from_entries(r.iter().map(|&(c, x)| (c, Rat::from_int(x)))))
                .collect();
            let scaled: Vec<SparseVec<Rat>> = base.iter()
                .map(|r| scale(r, &Rat::from_int(7)))
                .collect();
            proptest::prop_assert_eq!(rank_of_rows(base), rank_of_rows(scaled));
        }
    }
}

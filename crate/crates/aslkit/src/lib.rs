//! Exact-arithmetic toolkit for finite posets of distributive type, the
//! straightening-law ideals living on them, and the commutative-algebra
//! invariants (Cohen-Macaulayness, shellability, vertex decomposability,
//! graded Betti numbers, Gorenstein / level properties) that classify them.
//!
//! Everything is computed over exact arithmetic: integer bit-matrices for
//! order relations, arbitrary-precision rationals for all linear algebra.
//! The `suites` module drives exhaustive small-instance verification and is
//! what the `aslkit` CLI exposes.

pub mod betti;
pub mod complex;
pub mod ideal;
pub mod lattice;
pub mod linalg;
pub mod poset;
pub mod report;
pub mod suites;
pub mod topology;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("cover relation contains a cycle")]
    CycleDetected,
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("operation undefined on the empty poset")]
    EmptyPoset,
    #[error("`{0}` and `{1}` are not comparable")]
    NotComparable(String, String),
    #[error("size cap exceeded: {0}")]
    SizeCapExceeded(String),
    #[error("poset is not of distributive type")]
    NotDistributiveType,
    #[error("poset is not a lattice: {0}")]
    NotLattice(String),
    #[error("subset is not upward closed")]
    IdealNotUpwardClosed,
    #[error("face is not in the complex")]
    FaceNotInComplex,
    #[error("bad arguments: {0}")]
    BadArguments(String),
    #[error("degree bound exceeded: {0}")]
    DegreeBoundExceeded(String),
    #[error("internal consistency failure: {0}")]
    InternalMismatch(String),
    #[error("oracle cross-check disagreement: {0}")]
    ConsistencyFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

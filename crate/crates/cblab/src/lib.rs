//! Exact computations with type-A conformal-blocks bundles on moduli of
//! stable curves: ranks via fusion rules, first Chern classes paired with
//! F-curves, polynomial classification of rank scaling, and generation and
//! verification of Chern-class scaling identities.
//!
//! All arithmetic is exact: ranks are checked 128-bit (or big) integers and
//! divisor-class coordinates are arbitrary-precision rationals. Nothing in
//! this crate goes through floating point.

pub mod chern;
pub mod cli;
pub mod fusion;
pub mod hypotheses;
pub mod picard;
pub mod ranks;
pub mod repro;
pub mod scaling;
pub mod util;
pub mod weights;

/// Arbitrary-precision integer used for divisor-class numerators and
/// finite-difference tables.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational: divisor-class coordinates, Casimir scalars,
/// identity coefficients.
pub type Rat = num_rational::BigRational;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("invalid bundle spec: {0}")]
    InvalidSpec(String),
    #[error("level mismatch: {0}")]
    LevelMismatch(String),
    #[error("invalid boundary stratum: {0}")]
    InvalidStratum(String),
    #[error("inconclusive classification: {0}")]
    Inconclusive(String),
    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),
    #[error("normalization failure: {0}")]
    Normalization(String),
    #[error("fusion cache: {0}")]
    Cache(String),
    #[error("unknown identifier: {0}")]
    Unknown(String),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Convenience constructor for exact rationals from machine integers.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// Exact rational from an integer.
pub fn rat_int<T: Into<Int>>(p: T) -> Rat {
    Rat::from_integer(p.into())
}

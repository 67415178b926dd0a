//! Exact-arithmetic toolkit for Reidemeister numbers of free nilpotent and
//! free nilpotent metabelian groups, built on symmetric functions.
//!
//! The pipeline mirrors the underlying algebra:
//!
//! - [`partitions`]: integer partitions, Young tableaux, Kostka numbers,
//!   major index, and the Witt/Chen dimension formulas.
//! - [`symfunc`]: degree-truncated symmetric functions over the m/e/h/p/s
//!   bases, symmetric polynomials in finitely many variables, and expansion
//!   of symmetric polynomials in elementary symmetric polynomials.
//! - [`freelie`]: Hall and Chen bases of free (metabelian) nilpotent Lie
//!   algebras, the monomial map `eta`, and the degree-k generating functions.
//! - [`plethysm`]: plethysm of symmetric functions by two independent
//!   algorithms, plus the alternating elementary series.
//! - [`reidemeister`]: Reidemeister numbers from characteristic-polynomial
//!   coefficients and bounded spectrum searches.
//!
//! All arithmetic is exact: big integers and big rationals throughout.

pub mod freelie;
pub mod partitions;
pub mod plethysm;
pub mod reidemeister;
pub mod symfunc;

use thiserror::Error;

/// Errors surfaced by the library. Most operations are total on their
/// documented domains; these cover the genuinely fallible entry points.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A polynomial fed to `e_expand` is not symmetric: elimination found a
    /// leading exponent vector that is not weakly decreasing.
    #[error("polynomial is not symmetric: leading exponent vector {0:?}")]
    NotSymmetric(Vec<u16>),

    /// The tableau is not standard (required by `major_index`).
    #[error("tableau is not standard")]
    NonStandardTableau,

    /// An inner plethysm argument has a negative monomial coefficient, so
    /// the multiset-of-monomials reading is undefined.
    #[error("inner function has negative monomial coefficient at {0}")]
    NegativeInnerCoefficient(String),

    /// A spectrum search would enumerate more points than the caller's budget.
    #[error("search grid of {grid} points exceeds budget {budget}")]
    BudgetExceeded { grid: u128, budget: u128 },

    /// Malformed canonical text (term lists, partitions, reports).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

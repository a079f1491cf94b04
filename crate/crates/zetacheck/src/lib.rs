//! Numerical audit toolkit for prime/non-prime ordinal tables and the zeta
//! series identities they are built on.
//!
//! The crate has three layers:
//!
//! * closed-form per-number quantities: the prime branch
//!   `t = acos(-sqrt(p)/(m(m+1)))/ln p`, the non-prime branch with the
//!   opposite sign, the band `(pi/(2 ln p), pi/ln p)` those values live in,
//!   and the subscript recurrence ([`tvalue`], backed by [`primes`]);
//! * truncated Dirichlet-series machinery: zeta partial sums with integral
//!   tail correction, prime zeta with tail bounds, Euler products, the
//!   log-zeta expansions, and the claimed-but-false power identities whose
//!   residuals are measured rather than assumed ([`series`]);
//! * an independent complex zeta evaluator pair (accelerated alternating
//!   series and Euler-Maclaurin) with critical-line zero location ([`zeta`]).
//!
//! [`tables`] regenerates the published tables from the formula layer and
//! diffs them against digitized golden copies with an erratum ledger;
//! [`report`] orchestrates the verification suites behind the `zetacheck`
//! command-line tool.
//!
//! With the default `parallel` feature the bulk summations and row
//! generation run on rayon using fixed-block pairwise reduction, so parallel
//! and sequential runs produce bit-identical results.

pub mod primes;
pub mod report;
pub mod series;
pub mod sum;
pub mod tables;
pub mod tvalue;
pub mod zeta;

pub use primes::{Classification, CompositeEntry, Kind, PrimeEntry, Sieve};
pub use series::{BaselCheck, PrimeZetaPartial, SeriesTriplet, TruncationSpec};
pub use tables::{GoldenDiff, GoldenSummary, NaturalRow};
pub use tvalue::{FValue, TBand, TValue};
pub use zeta::{EvalResult, ZeroBracket, ZeroScan};

/// Crate-wide error type. Every operation precondition maps to a variant so
/// callers can distinguish domain violations from numerical breakdowns.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("sieve limit must be at least 2, got {0}")]
    SieveLimit(u64),
    #[error("{0}")]
    Domain(String),
    #[error(
        "sqrt({subject}) exceeds ordinal product {ordinal}*{next}; arccos argument outside [-1, 1]"
    )]
    ArccosDomain {
        subject: u64,
        ordinal: u64,
        next: u64,
    },
    #[error("{c} is prime; the non-prime branch does not apply")]
    Misclassification { c: u64 },
    #[error("cos(t ln p) is within 1e-12 of zero at p={p}, t={t}; F blows up at this cosine zero")]
    NearSingularity { p: u64, t: f64 },
    #[error("discriminant 1 - 4F = {disc} is negative (F = {f}); no real ordinal")]
    NegativeDiscriminant { f: f64, disc: f64 },
    #[error("series diverges for sigma = {sigma} <= 1")]
    Divergence { sigma: f64 },
    #[error("|zeta(sigma) - 1| = {magnitude} is outside the log-series radius of convergence")]
    ConvergenceRadius { magnitude: f64 },
    #[error("zeta has a pole at s = 1")]
    Pole,
    #[error("evaluation not supported for Re(s) = {sigma} <= 0")]
    UnsupportedSigma { sigma: f64 },
    #[error(
        "cutoff {cutoff} too small for |Im(s)| = {t_abs}; need more than |t|/2 + 10 abscissa terms"
    )]
    AccuracyCutoff { cutoff: usize, t_abs: f64 },
    #[error("range {lo}..={hi} does not fit inside sieve limit {limit}")]
    Range { lo: u64, hi: u64, limit: u64 },
    #[error("no rows to emit")]
    EmptyRows,
    #[error("unknown table format '{0}' (expected tsv, csv or markdown)")]
    UnknownFormat(String),
    #[error("unknown table layout '{0}' (expected mixed, primes_only or band)")]
    UnknownLayout(String),
    #[error(
        "unknown verification suite '{0}' (expected tables, identities, corollaries, zeros or all)"
    )]
    UnknownSuite(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

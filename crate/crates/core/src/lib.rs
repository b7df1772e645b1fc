//! Exact tools for the cyclotomic ordering of the positive integers.
//!
//! For positive integers `m` and `n` write `m ⪯ n` when `Φ_m(q) ≤ Φ_n(q)` for
//! every integer `q ≥ 2`, and `m ≺ n` when additionally `m ≠ n`. This crate
//! computes cyclotomic polynomials with arbitrary-precision coefficients,
//! decides `⪯` for a pair of indices with a finitely checkable
//! [`Certificate`](comparator::Certificate), and builds or verifies the
//! induced chain on `{1, …, N}`.
//!
//! ```
//! use cyclotomic_order::comparator::{compare, Verdict};
//! use cyclotomic_order::cyclotomic::CycloCache;
//!
//! let mut cache = CycloCache::new();
//! let (verdict, cert) = compare(6, 4, &mut cache).unwrap();
//! assert_eq!(verdict, Verdict::Less);
//! assert_eq!(cert.threshold_c, 1);
//! ```
//!
//! Modules, bottom-up:
//!
//! * [`arith`]: factorization, totient, Möbius, radical, divisors, inverse totient.
//! * [`intpoly`]: dense integer polynomials.
//! * [`cyclotomic`]: `Φ_n` by cached recursion and by an independent Möbius product.
//! * [`comparator`]: the finite decision procedure for `⪯` and its lemma shortcuts.
//! * [`order`]: totient classes, chain building, checkpoints, precedes checks.
//! * [`oracle`]: slow brute-force counterparts used by the test suites.
//! * [`cli`]: the `cyclord` command-line front end.

pub mod arith;
pub mod cli;
pub mod comparator;
pub mod cyclotomic;
mod error;
pub mod intpoly;
pub mod oracle;
pub mod order;

pub use error::{Error, Result};

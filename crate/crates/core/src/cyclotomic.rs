//! Cyclotomic polynomials `Φ_n(t)` and the inequalities built on them.
//!
//! [`cyclo`] fills a [`CycloCache`] by recursion on the factorization of `n`,
//! both steps being consequences of `t^n - 1 = ∏_{d | n} Φ_d(t)`:
//!
//! * `Φ_n(t) = Φ_r(t^{n/r})` where `r` is the radical of `n`;
//! * for squarefree `r = p·k` with `p` the largest prime, `Φ_r(t) = Φ_k(t^p) / Φ_k(t)`.
//!
//! [`cyclo_moebius`] is an independent construction from the Möbius-inverted
//! product and never looks at a cache.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::arith::{self, factorize};
use crate::intpoly::IntPoly;
use crate::{Error, Result};

/// Computed `Φ_n`, keyed by `n`.
///
/// Each entry has degree exactly `φ(n)`. A cache may be bounded by
/// degree, in which case larger polynomials are returned but not kept.
/// Caches are meant to be owned by one worker.
#[derive(Debug, Default)]
pub struct CycloCache {
    entries: HashMap<u64, Arc<IntPoly>>,
    max_degree: Option<usize>,
}

impl CycloCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Keep only entries of degree at most `max_degree`.
    pub fn bounded(max_degree: usize) -> Self {
        Self { entries: HashMap::new(), max_degree: Some(max_degree) }
    }

    pub fn get(&self, n: u64) -> Option<&Arc<IntPoly>> {
        self.entries.get(&n)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &IntPoly)> {
        self.entries.iter().map(|(&n, p)| (n, p.as_ref()))
    }

    fn store(&mut self, n: u64, poly: IntPoly) -> Arc<IntPoly> {
        let poly = Arc::new(poly);
        let keep = match self.max_degree {
            Some(limit) => poly.degree().is_some_and(|d| d <= limit),
            None => true,
        };
        if keep {
            self.entries.insert(n, Arc::clone(&poly));
        }
        poly
    }
}

fn as_usize(x: u64) -> Result<usize> {
    usize::try_from(x).map_err(|_| Error::Overflow)
}

/// `Φ_n(t)`, computed through (and stored in) `cache`.
pub fn cyclo(n: u64, cache: &mut CycloCache) -> Result<Arc<IntPoly>> {
    if n == 0 {
        return Err(Error::Zero { what: "n" });
    }
    if let Some(hit) = cache.get(n) {
        return Ok(Arc::clone(hit));
    }
    if n == 1 {
        return Ok(cache.store(1, IntPoly::from_i64(&[-1, 1])));
    }
    let f = factorize(n)?;
    let r = f.radical();
    let poly = if r != n {
        cyclo(r, cache)?.compose_power(as_usize(n / r)?)
    } else {
        let p = f.largest_prime().expect("n > 1 has a prime factor");
        let k = n / p;
        let inner = cyclo(k, cache)?;
        inner.compose_power(as_usize(p)?).div_exact(&inner)?
    };
    debug_assert_eq!(poly.degree(), as_usize(f.totient()).ok());
    Ok(cache.store(n, poly))
}

/// `Φ_n(t) = ∏_{d | n, μ(d) = 1} (t^{n/d} - 1) / ∏_{d | n, μ(d) = -1} (t^{n/d} - 1)`.
///
/// Slow and cache-free; use as a cross-check on [`cyclo`].
pub fn cyclo_moebius(n: u64) -> Result<IntPoly> {
    let f = factorize(n)?;
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for d in arith::divisors_of(&f) {
        let factor = IntPoly::t_pow_minus_one(as_usize(n / d)?);
        match factorize(d)?.moebius() {
            1 => num = &num * &factor,
            -1 => den = &den * &factor,
            _ => {}
        }
    }
    num.div_exact(&den)
}

fn require_q(q: &BigInt) -> Result<()> {
    if *q < BigInt::from(2) {
        return Err(Error::QTooSmall(q.to_string()));
    }
    Ok(())
}

/// Exact `Φ_n(q)` for `q >= 2`.
pub fn eval_cyclo(n: u64, q: &BigInt, cache: &mut CycloCache) -> Result<BigInt> {
    require_q(q)?;
    Ok(cyclo(n, cache)?.eval_at(q))
}

/// `(1 - 1/q) q^φ(n) < Φ_n(q) < q^φ(n) / (1 - 1/q)`, cleared of denominators:
/// `(q-1) q^(φ-1) < Φ_n(q)` and `(q-1) Φ_n(q) < q^(φ+1)`.
///
/// Undefined at `n = 1`, where the lower bound is attained: `Φ_1(q) = q - 1`.
pub fn check_hong_bounds(n: u64, q: u64, cache: &mut CycloCache) -> Result<bool> {
    match n {
        0 => return Err(Error::Zero { what: "n" }),
        1 => return Err(Error::IndexOne),
        _ => {}
    }
    let qb = BigInt::from(q);
    require_q(&qb)?;
    let phi = u32::try_from(arith::totient(n)?).map_err(|_| Error::Overflow)?;
    let value = eval_cyclo(n, &qb, cache)?;
    let q1 = &qb - 1;
    let lower = &q1 * qb.pow(phi - 1);
    let upper = qb.pow(phi + 1);
    Ok(lower < value && &q1 * &value < upper)
}

/// For odd `m`, whether `q^φ(m)` separates `Φ_m(q)` and `Φ_2m(q)` on the side
/// chosen by `μ(rad m)`: `Φ_m(q) < q^φ < Φ_2m(q)` when it is `1`, the mirror
/// image when it is `-1`.
pub fn check_mu_sandwich(m: u64, q: u64, cache: &mut CycloCache) -> Result<bool> {
    if m == 0 {
        return Err(Error::Zero { what: "m" });
    }
    if m.is_multiple_of(2) {
        return Err(Error::EvenIndex(m));
    }
    let qb = BigInt::from(q);
    require_q(&qb)?;
    let f = factorize(m)?;
    let phi = u32::try_from(f.totient()).map_err(|_| Error::Overflow)?;
    let mid = qb.pow(phi);
    let odd = eval_cyclo(m, &qb, cache)?;
    let even = eval_cyclo(2 * m, &qb, cache)?;
    // μ of the radical only depends on the number of distinct primes.
    Ok(if f.omega().is_multiple_of(2) {
        odd < mid && mid < even
    } else {
        even < mid && mid < odd
    })
}

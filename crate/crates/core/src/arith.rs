//! Elementary multiplicative number theory on machine-word indices.
//!
//! Indices are `u64`. Factoring is trial division against a fixed table of
//! primes below 2^16, continued by odd trial divisors past the table, which
//! is exact for every `u64` and fast for the index sizes used by the order
//! verifier (well below 10^6).

use std::sync::OnceLock;

use crate::{Error, Result};

const SIEVE_LIMIT: u32 = 1 << 16;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = SIEVE_LIMIT as usize;
        let mut composite = vec![false; n];
        let mut primes = Vec::new();
        for i in 2..n {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j < n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

fn nonzero(n: u64, what: &'static str) -> Result<()> {
    if n == 0 {
        Err(Error::Zero { what })
    } else {
        Ok(())
    }
}

/// Prime factorization as `(prime, exponent)` pairs with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    /// Number of distinct prime factors.
    pub fn omega(&self) -> usize {
        self.0.len()
    }

    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn totient(&self) -> u64 {
        self.0
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product()
    }

    pub fn moebius(&self) -> i8 {
        if !self.is_squarefree() {
            0
        } else if self.0.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn radical(&self) -> u64 {
        self.primes().product()
    }

    pub fn largest_prime(&self) -> Option<u64> {
        self.0.last().map(|&(p, _)| p)
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    nonzero(n, "n")?;
    let mut rest = n;
    let mut out = Vec::new();
    let take = |rest: &mut u64, p: u64, out: &mut Vec<(u64, u32)>| {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    for &p in small_primes() {
        let p = u64::from(p);
        if p * p > rest {
            break;
        }
        take(&mut rest, p, &mut out);
    }
    // Past the table: odd trial divisors. Only reached for n with a prime
    // factor above 2^16 whose cofactor is not yet known to be prime.
    let mut d = u64::from(SIEVE_LIMIT) + 1;
    while rest > 1 && d.checked_mul(d).is_some_and(|sq| sq <= rest) {
        take(&mut rest, d, &mut out);
        d += 2;
    }
    if rest > 1 {
        out.push((rest, 1));
    }
    Ok(Factorization(out))
}

pub fn totient(n: u64) -> Result<u64> {
    Ok(factorize(n)?.totient())
}

pub fn moebius(n: u64) -> Result<i8> {
    Ok(factorize(n)?.moebius())
}

pub fn radical(n: u64) -> Result<u64> {
    Ok(factorize(n)?.radical())
}

pub fn divisors(n: u64) -> Result<Vec<u64>> {
    Ok(divisors_of(&factorize(n)?))
}

/// All divisors of the factored integer, ascending.
pub fn divisors_of(f: &Factorization) -> Vec<u64> {
    let mut divs = vec![1u64];
    for &(p, e) in f.pairs() {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f.pairs() == [(n, 1)]).unwrap_or(false)
}

/// Every `x` with `φ(x) = v`, ascending.
///
/// Built by recursion over the primes `p` with `(p - 1) | v`: a solution is a
/// product of prime powers `p^k` with `(p - 1) p^(k-1)` dividing what is left
/// of `v`, taking primes in increasing order so each `x` is produced once.
/// Every prime factor of a solution has this form, so the enumeration is
/// complete without any search bound on `x`.
pub fn inverse_totient(v: u64) -> Result<Vec<u64>> {
    nonzero(v, "v")?;
    let mut primes: Vec<u64> = divisors(v)?
        .into_iter()
        .filter_map(|d| d.checked_add(1))
        .filter(|&p| is_prime(p))
        .collect();
    primes.sort_unstable();
    let mut out = Vec::new();
    preimages(v, 1, &primes, &mut out)?;
    out.sort_unstable();
    Ok(out)
}

fn preimages(rest: u64, acc: u64, primes: &[u64], out: &mut Vec<u64>) -> Result<()> {
    if rest == 1 {
        out.push(acc);
    }
    for (i, &p) in primes.iter().enumerate() {
        if !rest.is_multiple_of(p - 1) {
            continue;
        }
        let mut left = rest / (p - 1);
        let mut pk = p;
        loop {
            let next_acc = acc.checked_mul(pk).ok_or(Error::Overflow)?;
            preimages(left, next_acc, &primes[i + 1..], out)?;
            if !left.is_multiple_of(p) {
                break;
            }
            left /= p;
            pk = pk.checked_mul(p).ok_or(Error::Overflow)?;
        }
    }
    Ok(())
}

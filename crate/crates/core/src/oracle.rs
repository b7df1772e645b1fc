//! Slow, direct counterparts of the main pipeline for cross-checking.
//!
//! Nothing here reuses the code it checks: totients are counted or sieved,
//! polynomials come from [`cyclo_moebius`] and are evaluated by a local
//! Horner loop over their coefficient lists.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::cyclotomic::cyclo_moebius;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub q_max: u64,
    pub n_max: u64,
}

impl OracleConfig {
    pub fn new(q_max: u64, n_max: u64) -> Result<Self> {
        if q_max < 2 {
            return Err(Error::QTooSmall(q_max.to_string()));
        }
        if n_max == 0 {
            return Err(Error::Zero { what: "n_max" });
        }
        Ok(Self { q_max, n_max })
    }
}

/// `|{1 <= k <= n : gcd(k, n) = 1}|`, counted.
pub fn brute_totient(n: u64) -> u64 {
    assert!(n >= 1, "brute_totient needs n >= 1");
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

/// Signs of `Φ_n(q) - Φ_m(q)` for `q = 2..=q_max`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignSummary {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
    /// `(q, sign)` in increasing `q`.
    pub by_q: Vec<(u64, Ordering)>,
}

fn horner(coeffs: &[BigInt], q: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
}

pub fn brute_compare(m: u64, n: u64, q_max: u64) -> Result<SignSummary> {
    if q_max < 2 {
        return Err(Error::QTooSmall(q_max.to_string()));
    }
    let cm = cyclo_moebius(m)?.coeffs();
    let cn = cyclo_moebius(n)?.coeffs();
    let mut summary = SignSummary::default();
    for q in 2..=q_max {
        let qb = BigInt::from(q);
        let s = horner(&cn, &qb).cmp(&horner(&cm, &qb));
        match s {
            Ordering::Greater => summary.positive += 1,
            Ordering::Equal => summary.zero += 1,
            Ordering::Less => summary.negative += 1,
        }
        summary.by_q.push((q, s));
    }
    Ok(summary)
}

/// Scan `1..=scan_max` for `φ(x) = v`, with totients from a sieve.
///
/// `scan_max >= 2 v^2 + 10` is required: `φ(x) >= sqrt(x / 2)` for every `x`
/// (each prime power contributes `p^(k-1)(p-1) >= sqrt(p^k)` except `2^1`, which
/// costs at most a factor `sqrt 2`), so all preimages of `v` are at most `2 v^2`.
pub fn brute_inverse_totient(v: u64, scan_max: u64) -> Result<Vec<u64>> {
    if v == 0 {
        return Err(Error::Zero { what: "v" });
    }
    let need = v
        .checked_mul(v)
        .and_then(|s| s.checked_mul(2))
        .and_then(|s| s.checked_add(10))
        .ok_or(Error::Overflow)?;
    if scan_max < need {
        return Err(Error::InvalidArgument(format!(
            "scan_max {scan_max} is below 2v^2 + 10 = {need}"
        )));
    }
    let len = usize::try_from(scan_max).map_err(|_| Error::Overflow)? + 1;
    let mut phi: Vec<u64> = (0..len as u64).collect();
    for p in 2..len {
        if phi[p] == p as u64 {
            for k in (p..len).step_by(p) {
                phi[k] -= phi[k] / p as u64;
            }
        }
    }
    Ok((1..len).filter(|&x| phi[x] == v).map(|x| x as u64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_examples() {
        assert_eq!(brute_totient(1), 1);
        assert_eq!(brute_totient(12), 4);
        assert_eq!(brute_totient(30), 8);
    }

    #[test]
    fn compare_examples() {
        let s = brute_compare(1, 2, 10).unwrap();
        assert_eq!((s.positive, s.zero, s.negative), (9, 0, 0));
        let s = brute_compare(9, 9, 10).unwrap();
        assert_eq!((s.positive, s.zero, s.negative), (0, 9, 0));
        let s = brute_compare(6, 4, 10).unwrap();
        assert_eq!(s.positive, 9);
        assert!(brute_compare(1, 2, 1).is_err());
    }

    #[test]
    fn inverse_totient_examples() {
        assert_eq!(brute_inverse_totient(4, 100).unwrap(), vec![5, 8, 10, 12]);
        assert_eq!(brute_inverse_totient(1, 100).unwrap(), vec![1, 2]);
        assert!(brute_inverse_totient(14, 500).unwrap().is_empty());
        assert!(brute_inverse_totient(14, 400).is_err());
    }

    #[test]
    fn config_validation() {
        assert!(OracleConfig::new(1, 5).is_err());
        assert!(OracleConfig::new(2, 0).is_err());
        assert_eq!(OracleConfig::new(60, 200).unwrap().q_max, 60);
    }
}

//! Deciding `m ⪯ n` for all `q >= 2` with a finite certificate.
//!
//! Let `D = Φ_n - Φ_m` and `c = max |coeff(D)|`. For `q >= c + 1` the sign of
//! `D(q)` is the sign of its leading coefficient, since
//!
//! ```text
//! |D(q)| >= q^d - c (q^{d-1} + ... + 1) = q^d - c (q^d - 1)/(q - 1) > 0.
//! ```
//!
//! Splitting `D = A - B` into its positive and negative parts reads the same
//! fact as a comparison of base-`q` digit strings: every digit is below `q`,
//! so the leading monomial decides. The remaining points `2 <= q <= c` are
//! evaluated exactly. Together these settle the sign of `D` on every `q >= 2`.
//!
//! A zero of `D` at some `q` (a tie) does not break `⪯`, which is defined with
//! `<=`. Ties are listed in the certificate so that strictness can be audited.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith::factorize;
use crate::cyclotomic::{cyclo, CycloCache};
use crate::intpoly::IntPoly;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// `Φ_m(q) <= Φ_n(q)` for every `q >= 2`, with `m != n`.
    Less,
    Greater,
    Equal,
    /// The sign of `Φ_n(q) - Φ_m(q)` changes over `q >= 2`.
    Incomparable,
}

impl Verdict {
    pub fn reverse(self) -> Self {
        match self {
            Verdict::Less => Verdict::Greater,
            Verdict::Greater => Verdict::Less,
            v => v,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Less => "LESS",
            Verdict::Greater => "GREATER",
            Verdict::Equal => "EQUAL",
            Verdict::Incomparable => "INCOMPARABLE",
        }
    }

    fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => Verdict::Less,
            Ordering::Equal => Verdict::Equal,
            Ordering::Greater => Verdict::Greater,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "LESS" => Ok(Verdict::Less),
            "GREATER" => Ok(Verdict::Greater),
            "EQUAL" => Ok(Verdict::Equal),
            "INCOMPARABLE" => Ok(Verdict::Incomparable),
            other => Err(Error::InvalidArgument(format!("unknown verdict {other:?}"))),
        }
    }
}

/// Which reasoning produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ShortcutTag {
    /// Full polynomial comparison.
    #[default]
    None,
    /// Different totients: the smaller totient is the smaller element.
    Totient,
    /// `{k, 2k}` with `k` odd: ordered by the parity of the number of primes of `k`.
    OddDouble,
}

/// Positive and negative parts of the difference `Φ_n - Φ_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceSplit {
    pub positive: IntPoly,
    pub negative: IntPoly,
}

/// Finite evidence for a verdict on all `q >= 2`.
///
/// Serialized as one JSON object per line with the keys `verdict`, `m`, `n`,
/// `threshold_c`, `leading_sign`, `checked_q_max`, `tie_witnesses`,
/// `flip_witnesses` and `shortcut_tag`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub m: u64,
    pub n: u64,
    /// Largest absolute coefficient of `Φ_n - Φ_m`.
    pub threshold_c: u64,
    /// Sign of the leading coefficient of `Φ_n - Φ_m`: `-1`, `0` or `1`.
    pub leading_sign: i8,
    /// Every `q` in `2..=checked_q_max` was evaluated exactly; `max(c, 1)`.
    pub checked_q_max: u64,
    /// Points where `Φ_m(q) = Φ_n(q)`.
    pub tie_witnesses: Vec<u64>,
    /// For an incomparable pair: a `q` with `Φ_n(q) > Φ_m(q)` then one with
    /// `Φ_n(q) < Φ_m(q)`. A witness for the leading sign that is only seen past
    /// the finite range is `checked_q_max + 1`, evaluated exactly.
    pub flip_witnesses: Vec<u64>,
    #[serde(default)]
    pub shortcut_tag: ShortcutTag,
    #[serde(skip)]
    pub split: Option<DifferenceSplit>,
}

impl Certificate {
    /// Decide from the difference `d = Φ_n - Φ_m` alone.
    pub fn from_difference(m: u64, n: u64, d: &IntPoly) -> Result<Self> {
        let c_big = d.max_abs_coeff();
        let threshold_c = c_big
            .to_u64()
            .filter(|&c| c < u64::MAX)
            .ok_or_else(|| Error::ThresholdTooLarge(c_big.to_string()))?;
        let leading = d.leading_sign();
        let checked_q_max = threshold_c.max(1);
        let mut ties = Vec::new();
        let mut first_pos = None;
        let mut first_neg = None;
        for q in 2..=checked_q_max {
            match d.sign_at(q) {
                Ordering::Equal => ties.push(q),
                Ordering::Greater => {
                    first_pos.get_or_insert(q);
                }
                Ordering::Less => {
                    first_neg.get_or_insert(q);
                }
            }
        }
        let verdict = match (leading, first_pos, first_neg) {
            (Ordering::Equal, _, _) => Verdict::Equal,
            (Ordering::Greater, _, None) => Verdict::Less,
            (Ordering::Less, None, _) => Verdict::Greater,
            _ => Verdict::Incomparable,
        };
        let mut flip_witnesses = Vec::new();
        if verdict == Verdict::Incomparable {
            let beyond = checked_q_max + 1;
            let witness = |found: Option<u64>, want: Ordering| -> u64 {
                found.unwrap_or_else(|| {
                    debug_assert_eq!(d.sign_at(beyond), want);
                    beyond
                })
            };
            let pos = witness(first_pos, Ordering::Greater);
            let neg = witness(first_neg, Ordering::Less);
            flip_witnesses = vec![pos, neg];
        }
        Ok(Certificate {
            verdict,
            m,
            n,
            threshold_c,
            leading_sign: leading as i8,
            checked_q_max,
            tie_witnesses: ties,
            flip_witnesses,
            shortcut_tag: ShortcutTag::None,
            split: None,
        })
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_line(line: &str) -> Result<Self> {
        Ok(serde_json::from_str(line)?)
    }
}

/// Full comparison of two given polynomials, `phi_m = Φ_m` and `phi_n = Φ_n`.
pub fn compare_polys(m: u64, n: u64, phi_m: &IntPoly, phi_n: &IntPoly) -> Result<Certificate> {
    Certificate::from_difference(m, n, &phi_n.sub(phi_m))
}

fn positive(m: u64, n: u64) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::Zero { what: "index" });
    }
    Ok(())
}

/// Decide `m` against `n` by the full finite procedure.
pub fn compare(m: u64, n: u64, cache: &mut CycloCache) -> Result<(Verdict, Certificate)> {
    positive(m, n)?;
    if m == n {
        let cert = Certificate::from_difference(m, n, &IntPoly::zero())?;
        return Ok((cert.verdict, cert));
    }
    let (pm, pn) = (cyclo(m, cache)?, cyclo(n, cache)?);
    let cert = compare_polys(m, n, &pm, &pn)?;
    Ok((cert.verdict, cert))
}

/// [`compare`], keeping the positive/negative split of the difference in the certificate.
pub fn compare_audited(m: u64, n: u64, cache: &mut CycloCache) -> Result<(Verdict, Certificate)> {
    positive(m, n)?;
    let (pm, pn) = (cyclo(m, cache)?, cyclo(n, cache)?);
    let d = pn.sub(&pm);
    let mut cert = Certificate::from_difference(m, n, &d)?;
    let (positive, negative) = d.split_pos_neg();
    cert.split = Some(DifferenceSplit { positive, negative });
    Ok((cert.verdict, cert))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Route {
    Totient { phi_m: u64, phi_n: u64 },
    /// `odd` is the odd member of the pair; `mu` is `μ(rad odd)`.
    OddDouble { odd: u64, mu: i8 },
    Full(Certificate),
}

impl Route {
    pub fn tag(&self) -> ShortcutTag {
        match self {
            Route::Totient { .. } => ShortcutTag::Totient,
            Route::OddDouble { .. } => ShortcutTag::OddDouble,
            Route::Full(_) => ShortcutTag::None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastComparison {
    pub m: u64,
    pub n: u64,
    pub verdict: Verdict,
    pub route: Route,
}

impl FastComparison {
    /// One JSON object: the certificate when the full procedure ran, otherwise
    /// `verdict`, `m`, `n` and `shortcut_tag`.
    pub fn to_line(&self) -> String {
        match &self.route {
            Route::Full(cert) => cert.to_line(),
            route => serde_json::json!({
                "verdict": self.verdict,
                "m": self.m,
                "n": self.n,
                "shortcut_tag": route.tag(),
            })
            .to_string(),
        }
    }
}

/// Same verdict as [`compare`], skipping polynomial work where a lemma applies.
///
/// * `φ(m) != φ(n)`: the index with the smaller totient is smaller.
/// * `{m, n} = {k, 2k}`, `k` odd: `k ≺ 2k` when `k` has an even number of
///   distinct primes, `2k ≺ k` when odd.
pub fn compare_fast(m: u64, n: u64, cache: &mut CycloCache) -> Result<FastComparison> {
    positive(m, n)?;
    let (fm, fn_) = (factorize(m)?, factorize(n)?);
    let (phi_m, phi_n) = (fm.totient(), fn_.totient());
    if phi_m != phi_n {
        return Ok(FastComparison {
            m,
            n,
            verdict: Verdict::from_ordering(phi_m.cmp(&phi_n)),
            route: Route::Totient { phi_m, phi_n },
        });
    }
    let odd_double = if m % 2 == 1 && n == 2 * m {
        Some((m, fm.omega(), Verdict::Less))
    } else if n % 2 == 1 && m == 2 * n {
        Some((n, fn_.omega(), Verdict::Greater))
    } else {
        None
    };
    if let Some((odd, omega, odd_first)) = odd_double {
        let mu = if omega % 2 == 0 { 1 } else { -1 };
        let verdict = if mu == 1 { odd_first } else { odd_first.reverse() };
        return Ok(FastComparison { m, n, verdict, route: Route::OddDouble { odd, mu } });
    }
    let (verdict, cert) = compare(m, n, cache)?;
    Ok(FastComparison { m, n, verdict, route: Route::Full(cert) })
}

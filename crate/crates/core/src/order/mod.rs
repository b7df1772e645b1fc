//! The total order on a finite range, and "precedes" checks.
//!
//! Indices with different totients never need a polynomial comparison: the
//! smaller totient is the smaller element. So `{1, …, N}` is partitioned into
//! totient classes, each class is sorted by pairwise certificates, and the
//! classes are concatenated by increasing totient.
//!
//! The same fact bounds every "precedes" question. If `m ≺ x ≺ n` then
//! `φ(m) <= φ(x) <= φ(n)`, so the possible blockers between `m` and `n` are
//! exactly the preimages of the totient values in that band, a finite set
//! enumerated by [`inverse_totient`]. A finite computation over the band
//! therefore answers "precedes" over all positive integers.

mod chain;
pub mod checkpoint;
pub mod format;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::{inverse_totient, totient};
use crate::comparator::{compare_fast, compare_polys, Certificate, Verdict};
use crate::cyclotomic::{cyclo, CycloCache};
use crate::{Error, Result};

pub use chain::{
    build_chain, build_chain_with, stable_prefix_len, ChainOptions, ChainReport, ClassSummary,
};

/// Indices in a range sharing one totient value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiClass {
    pub phi_value: u64,
    /// Ascending.
    pub members: Vec<u64>,
}

/// Totient classes of `{1, …, range_max}`, by increasing totient.
pub fn phi_classes(range_max: u64) -> Result<Vec<PhiClass>> {
    if range_max == 0 {
        return Err(Error::Zero { what: "range_max" });
    }
    let mut classes: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for x in 1..=range_max {
        classes.entry(totient(x)?).or_default().push(x);
    }
    Ok(classes
        .into_iter()
        .map(|(phi_value, members)| PhiClass { phi_value, members })
        .collect())
}

/// An equality `Φ_m(q) = Φ_n(q)` found while comparing `m ≺ n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiePair {
    pub m: u64,
    pub n: u64,
    pub q: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortedClass {
    pub phi_value: u64,
    /// Members in `≺` order when no incomparable pair exists; otherwise by the
    /// number of members below each, then by index.
    pub ordered: Vec<u64>,
    /// One certificate per unordered pair, in lexicographic order of the
    /// pair's positions in the ascending member list.
    pub certificates: Vec<Certificate>,
    pub incomparable: Vec<Certificate>,
}

impl SortedClass {
    pub fn ties(&self) -> Vec<TiePair> {
        let mut ties = Vec::new();
        for cert in &self.certificates {
            let (lo, hi) = match cert.verdict {
                Verdict::Greater => (cert.n, cert.m),
                _ => (cert.m, cert.n),
            };
            ties.extend(cert.tie_witnesses.iter().map(|&q| TiePair { m: lo, n: hi, q }));
        }
        ties
    }

    pub fn max_threshold_c(&self) -> u64 {
        self.certificates.iter().map(|c| c.threshold_c).max().unwrap_or(0)
    }

    /// SHA-256 of the certificate lines, newline-terminated, as lowercase hex.
    pub fn certificate_hash(&self) -> String {
        certificate_stream_hash(&self.certificates)
    }
}

pub fn certificate_stream_hash(certs: &[Certificate]) -> String {
    let mut hasher = Sha256::new();
    for cert in certs {
        hasher.update(cert.to_line().as_bytes());
        hasher.update(b"\n");
    }
    hex::encode(hasher.finalize())
}

/// Compare every pair in the class and order the members.
pub fn sort_class(class: &PhiClass, cache: &mut CycloCache) -> Result<SortedClass> {
    let members = &class.members;
    if members.is_empty() {
        return Err(Error::InvalidArgument("empty totient class".into()));
    }
    let polys = members
        .iter()
        .map(|&x| cyclo(x, cache))
        .collect::<Result<Vec<_>>>()?;
    let k = members.len();
    let mut below = vec![0usize; k];
    let mut certificates = Vec::with_capacity(k * (k - 1) / 2);
    let mut incomparable = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let cert = compare_polys(members[i], members[j], &polys[i], &polys[j])?;
            match cert.verdict {
                Verdict::Less => below[j] += 1,
                Verdict::Greater => below[i] += 1,
                Verdict::Equal => unreachable!("distinct indices have distinct Φ"),
                Verdict::Incomparable => incomparable.push(cert.clone()),
            }
            certificates.push(cert);
        }
    }
    let mut ordered: Vec<(usize, u64)> = below.into_iter().zip(members.iter().copied()).collect();
    ordered.sort_unstable();
    Ok(SortedClass {
        phi_value: class.phi_value,
        ordered: ordered.into_iter().map(|(_, x)| x).collect(),
        certificates,
        incomparable,
    })
}

/// Whether `m` precedes `n`: `m ≺ n` with nothing strictly between.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecedesReport {
    pub m: u64,
    pub n: u64,
    pub holds: bool,
    /// Every `x ∉ {m, n}` with `φ(m) <= φ(x) <= φ(n)`, ascending.
    pub candidates_examined: Vec<u64>,
    /// Candidates with `m ≺ x ≺ n`.
    pub blockers: Vec<u64>,
    /// Candidates incomparable with `m` or with `n`.
    pub undecided: Vec<u64>,
}

/// Requires `m ≺ n`; otherwise fails with [`Error::NotRelated`], or with
/// [`Error::Incomparable`] when the pair has no order at all.
pub fn precedes(m: u64, n: u64, cache: &mut CycloCache) -> Result<PrecedesReport> {
    if m == n {
        return Err(Error::InvalidArgument(format!("precedes needs distinct indices, got {m} twice")));
    }
    let (phi_m, phi_n) = (totient(m)?, totient(n)?);
    if phi_m > phi_n {
        return Err(Error::NotRelated { m, n });
    }
    let direct = compare_fast(m, n, cache)?;
    match direct.verdict {
        Verdict::Less => {}
        Verdict::Incomparable => {
            let crate::comparator::Route::Full(certificate) = direct.route else {
                unreachable!("shortcuts never return Incomparable")
            };
            return Err(Error::Incomparable { m, n, certificate: Box::new(certificate) });
        }
        _ => return Err(Error::NotRelated { m, n }),
    }
    let mut candidates = Vec::new();
    for v in phi_m..=phi_n {
        candidates.extend(inverse_totient(v)?.into_iter().filter(|&x| x != m && x != n));
    }
    candidates.sort_unstable();
    let mut blockers = Vec::new();
    let mut undecided = Vec::new();
    for &x in &candidates {
        let lower = compare_fast(m, x, cache)?.verdict;
        let upper = compare_fast(x, n, cache)?.verdict;
        if lower == Verdict::Incomparable || upper == Verdict::Incomparable {
            undecided.push(x);
        } else if lower == Verdict::Less && upper == Verdict::Less {
            blockers.push(x);
        }
    }
    Ok(PrecedesReport {
        m,
        n,
        holds: blockers.is_empty(),
        candidates_examined: candidates,
        blockers,
        undecided,
    })
}

/// `precedes(2·3^i, 3^i)` for `i = 1..=i_max`.
pub fn check_conjecture2(i_max: u32) -> Result<Vec<(u32, PrecedesReport)>> {
    if i_max == 0 {
        return Err(Error::Zero { what: "i_max" });
    }
    let mut cache = CycloCache::new();
    (1..=i_max)
        .map(|i| {
            let n = 3u64.checked_pow(i).ok_or(Error::Overflow)?;
            let m = n.checked_mul(2).ok_or(Error::Overflow)?;
            Ok((i, precedes(m, n, &mut cache)?))
        })
        .collect()
}

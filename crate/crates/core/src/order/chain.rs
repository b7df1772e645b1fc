use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::{mpsc, Arc};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::checkpoint::Checkpoint;
use super::{phi_classes, sort_class, PhiClass, TiePair};
use crate::arith::inverse_totient;
use crate::comparator::Certificate;
use crate::cyclotomic::CycloCache;
use crate::{Error, Result};

/// Largest degree a worker's cache keeps. Every recursion step that the
/// verifier needs at ranges up to a few times 10^4 reads entries well below it.
const WORKER_CACHE_DEGREE: usize = 2048;
const CHECKPOINT_INTERVAL: Duration = Duration::from_secs(2);

/// Outcome of sorting one totient class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub phi_value: u64,
    pub ordered: Vec<u64>,
    pub compares: u64,
    pub max_threshold_c: u64,
    pub ties: Vec<TiePair>,
    pub incomparable: Vec<Certificate>,
    pub certificate_hash: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub range_max: u64,
    /// All of `1..=range_max`, classes by increasing totient, each class in `≺` order.
    pub sequence: Vec<u64>,
    pub class_count: usize,
    /// Full comparisons performed (pairs inside classes).
    pub pair_count: u64,
    pub incomparable_pairs: Vec<Certificate>,
    pub tie_pairs: Vec<TiePair>,
    /// Length of the prefix of `sequence` that no larger range can change.
    pub stable_prefix_len: usize,
    pub max_threshold_c: u64,
    pub classes: Vec<ClassSummary>,
}

impl ChainReport {
    pub fn stable_prefix(&self) -> &[u64] {
        &self.sequence[..self.stable_prefix_len]
    }

    pub fn is_total_order(&self) -> bool {
        self.incomparable_pairs.is_empty()
    }
}

/// Totient classes with value `v` are complete below `range_max` iff every
/// preimage of `v` is at most `range_max`. The stable prefix is the run of
/// complete classes, taken over every totient value `1, 2, 3, …` (values without
/// preimages are skipped) until the first incomplete one.
pub fn stable_prefix_len(range_max: u64) -> Result<usize> {
    let mut len = 0usize;
    for v in 1.. {
        let pre = inverse_totient(v)?;
        match pre.last() {
            None => continue,
            Some(&top) if top <= range_max => len += pre.len(),
            Some(_) => break,
        }
    }
    Ok(len)
}

pub type ProgressFn<'a> = Box<dyn FnMut(&ClassSummary) + 'a>;

pub struct ChainOptions<'a> {
    pub workers: usize,
    /// Resume from and write progress to this file.
    pub checkpoint: Option<PathBuf>,
    /// Called on the coordinating thread after each class completes.
    pub progress: Option<ProgressFn<'a>>,
    /// When set, no further classes are started; finished work is checkpointed
    /// and the run ends with [`Error::Interrupted`].
    pub stop: Option<Arc<AtomicBool>>,
}

impl Default for ChainOptions<'_> {
    fn default() -> Self {
        Self { workers: 1, checkpoint: None, progress: None, stop: None }
    }
}

pub fn build_chain(range_max: u64, workers: usize) -> Result<ChainReport> {
    build_chain_with(range_max, ChainOptions { workers, ..ChainOptions::default() })
}

fn summarize(class: &PhiClass, cache: &mut CycloCache) -> Result<ClassSummary> {
    let sorted = sort_class(class, cache)?;
    Ok(ClassSummary {
        phi_value: sorted.phi_value,
        compares: sorted.certificates.len() as u64,
        max_threshold_c: sorted.max_threshold_c(),
        ties: sorted.ties(),
        certificate_hash: sorted.certificate_hash(),
        incomparable: sorted.incomparable,
        ordered: sorted.ordered,
    })
}

/// Sort every class of `1..=range_max` on a pool of workers, each owning a
/// private cache, and assemble the chain. The result does not depend on the
/// number of workers or on scheduling.
pub fn build_chain_with(range_max: u64, mut opts: ChainOptions<'_>) -> Result<ChainReport> {
    if opts.workers == 0 {
        return Err(Error::Zero { what: "workers" });
    }
    let classes = phi_classes(range_max)?;
    let mut done = match &opts.checkpoint {
        Some(path) if path.exists() => Checkpoint::load(path)?.into_completed(range_max)?,
        _ => Default::default(),
    };

    let mut pending: Vec<PhiClass> =
        classes.iter().filter(|c| !done.contains_key(&c.phi_value)).cloned().collect();
    // Largest classes first for load balance.
    pending.sort_by_key(|c| std::cmp::Reverse((c.members.len() as u64).pow(2) * c.phi_value));

    let stop = opts.stop.clone().unwrap_or_default();
    let next = AtomicUsize::new(0);
    let workers = opts.workers.min(pending.len()).max(1);
    let (tx, rx) = mpsc::channel::<Result<ClassSummary>>();
    let mut failure = None;

    std::thread::scope(|scope| {
        for _ in 0..workers {
            let tx = tx.clone();
            let (pending, next, stop) = (&pending, &next, &stop);
            scope.spawn(move || {
                let mut cache = CycloCache::bounded(WORKER_CACHE_DEGREE);
                while !stop.load(Ordering::Relaxed) {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(class) = pending.get(i) else { break };
                    let result = summarize(class, &mut cache);
                    let failed = result.is_err();
                    if tx.send(result).is_err() || failed {
                        break;
                    }
                }
            });
        }
        drop(tx);

        let mut last_write = Instant::now();
        for result in rx {
            match result {
                Ok(summary) => {
                    if let Some(progress) = opts.progress.as_mut() {
                        progress(&summary);
                    }
                    done.insert(summary.phi_value, summary);
                    if let Some(path) = &opts.checkpoint {
                        if last_write.elapsed() >= CHECKPOINT_INTERVAL {
                            if let Err(e) = Checkpoint::new(range_max, &done).save(path) {
                                failure.get_or_insert(e);
                                stop.store(true, Ordering::Relaxed);
                            }
                            last_write = Instant::now();
                        }
                    }
                }
                Err(e) => {
                    failure.get_or_insert(e);
                    stop.store(true, Ordering::Relaxed);
                }
            }
        }
    });

    if let Some(path) = &opts.checkpoint {
        Checkpoint::new(range_max, &done).save(path)?;
    }
    if let Some(e) = failure {
        return Err(e);
    }
    if done.len() < classes.len() {
        return Err(Error::Interrupted);
    }
    assemble(range_max, done.into_values().collect())
}

fn assemble(range_max: u64, classes: Vec<ClassSummary>) -> Result<ChainReport> {
    let mut report = ChainReport {
        range_max,
        sequence: Vec::with_capacity(range_max as usize),
        class_count: classes.len(),
        pair_count: 0,
        incomparable_pairs: Vec::new(),
        tie_pairs: Vec::new(),
        stable_prefix_len: stable_prefix_len(range_max)?,
        max_threshold_c: 0,
        classes: Vec::new(),
    };
    for c in &classes {
        report.sequence.extend_from_slice(&c.ordered);
        report.pair_count += c.compares;
        report.incomparable_pairs.extend(c.incomparable.iter().cloned());
        report.tie_pairs.extend_from_slice(&c.ties);
        report.max_threshold_c = report.max_threshold_c.max(c.max_threshold_c);
    }
    report.classes = classes;
    Ok(report)
}

//! Resumable progress for long chain builds.
//!
//! A checkpoint is a JSON document listing the completed totient classes with
//! their sorted members, comparison counts, ties, incomparable certificates
//! and the SHA-256 of each class's certificate stream. `content_hash` is the
//! SHA-256 of the serialized class list; [`Checkpoint::load`] rejects a file
//! whose classes do not hash to it.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::chain::ClassSummary;
use crate::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub format_version: u32,
    pub range_max: u64,
    pub classes: Vec<ClassSummary>,
    pub content_hash: String,
}

fn content_hash(classes: &[ClassSummary]) -> Result<String> {
    let bytes = serde_json::to_vec(classes)?;
    Ok(hex::encode(Sha256::digest(bytes)))
}

impl Checkpoint {
    pub fn new(range_max: u64, done: &BTreeMap<u64, ClassSummary>) -> Self {
        let classes: Vec<ClassSummary> = done.values().cloned().collect();
        let content_hash = content_hash(&classes).expect("class summaries serialize");
        Self { format_version: FORMAT_VERSION, range_max, classes, content_hash }
    }

    /// Write through a temporary file and rename, so a crash never leaves a
    /// truncated checkpoint behind.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        {
            let mut f = fs::File::create(&tmp)?;
            serde_json::to_writer(&mut f, self)?;
            f.write_all(b"\n")?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let cp: Checkpoint = serde_json::from_slice(&fs::read(path)?)?;
        if cp.format_version != FORMAT_VERSION {
            return Err(Error::CheckpointMismatch(format!(
                "format version {} (expected {FORMAT_VERSION})",
                cp.format_version
            )));
        }
        let computed = content_hash(&cp.classes)?;
        if computed != cp.content_hash {
            return Err(Error::CheckpointHash { expected: cp.content_hash, computed });
        }
        Ok(cp)
    }

    /// Completed classes keyed by totient value, for a run over `range_max`.
    pub fn into_completed(self, range_max: u64) -> Result<BTreeMap<u64, ClassSummary>> {
        if self.range_max != range_max {
            return Err(Error::CheckpointMismatch(format!(
                "checkpoint covers 1..={}, run asks for 1..={range_max}",
                self.range_max
            )));
        }
        Ok(self.classes.into_iter().map(|c| (c.phi_value, c)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{build_chain, build_chain_with, ChainOptions};
    use std::sync::atomic::{AtomicBool, Ordering};
    use std::sync::Arc;

    #[test]
    fn resume_gives_the_same_report() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.json");
        let full = build_chain(400, 2).unwrap();

        // Stop after a handful of classes.
        let stop = Arc::new(AtomicBool::new(false));
        let flag = Arc::clone(&stop);
        let mut seen = 0;
        let opts = ChainOptions {
            workers: 1,
            checkpoint: Some(path.clone()),
            progress: Some(Box::new(move |_| {
                seen += 1;
                if seen == 5 {
                    flag.store(true, Ordering::Relaxed);
                }
            })),
            stop: Some(stop),
        };
        assert!(matches!(build_chain_with(400, opts), Err(Error::Interrupted)));
        let partial = Checkpoint::load(&path).unwrap();
        assert!(partial.classes.len() >= 5 && partial.classes.len() < full.class_count);

        let opts = ChainOptions { workers: 3, checkpoint: Some(path.clone()), ..Default::default() };
        assert_eq!(build_chain_with(400, opts).unwrap(), full);
        assert_eq!(Checkpoint::load(&path).unwrap().classes.len(), full.class_count);
    }

    #[test]
    fn tampered_checkpoint_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.json");
        let opts = ChainOptions { checkpoint: Some(path.clone()), ..Default::default() };
        build_chain_with(60, opts).unwrap();

        let mut cp = Checkpoint::load(&path).unwrap();
        cp.classes[3].ordered.reverse();
        fs::write(&path, serde_json::to_vec(&cp).unwrap()).unwrap();
        assert!(matches!(Checkpoint::load(&path), Err(Error::CheckpointHash { .. })));
        let opts = ChainOptions { checkpoint: Some(path.clone()), ..Default::default() };
        assert!(matches!(build_chain_with(60, opts), Err(Error::CheckpointHash { .. })));
    }

    #[test]
    fn range_mismatch_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.json");
        let opts = ChainOptions { checkpoint: Some(path.clone()), ..Default::default() };
        build_chain_with(50, opts).unwrap();
        let opts = ChainOptions { checkpoint: Some(path), ..Default::default() };
        assert!(matches!(build_chain_with(51, opts), Err(Error::CheckpointMismatch(_))));
    }
}

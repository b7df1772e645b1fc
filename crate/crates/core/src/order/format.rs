//! Sequence output.
//!
//! * `plain`: one index per line.
//! * `oeis-bfile`: `k a(k)` per line, `k` from 1, stable prefix only.
//! * `delimited`: CSV with header `position,index,totient,tie_flag`.
//! * `structured`: the whole [`ChainReport`] as one JSON object.
//!
//! The first three list the stable prefix.

use std::collections::HashSet;
use std::io::{self, Write};

use super::ChainReport;
use crate::arith::totient;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Structured,
    OeisBfile,
    Delimited,
}

pub fn write_chain<W: Write + ?Sized>(report: &ChainReport, format: OutputFormat, out: &mut W) -> Result<()> {
    let prefix = report.stable_prefix();
    match format {
        OutputFormat::Plain => {
            for x in prefix {
                writeln!(out, "{x}")?;
            }
        }
        OutputFormat::OeisBfile => {
            for (k, x) in prefix.iter().enumerate() {
                writeln!(out, "{} {x}", k + 1)?;
            }
        }
        OutputFormat::Delimited => {
            let tied: HashSet<u64> = report.tie_pairs.iter().flat_map(|t| [t.m, t.n]).collect();
            writeln!(out, "position,index,totient,tie_flag")?;
            for (k, &x) in prefix.iter().enumerate() {
                writeln!(out, "{},{x},{},{}", k + 1, totient(x)?, u8::from(tied.contains(&x)))?;
            }
        }
        OutputFormat::Structured => {
            serde_json::to_writer(&mut *out, report)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Parse a b-file back into its terms, checking that `k` counts from 1.
pub fn parse_bfile(text: &str) -> io::Result<Vec<u64>> {
    let bad = |line: &str| io::Error::new(io::ErrorKind::InvalidData, format!("bad b-file line {line:?}"));
    let mut terms = Vec::new();
    for line in text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')) {
        let mut it = line.split_whitespace();
        let (Some(k), Some(a), None) = (it.next(), it.next(), it.next()) else {
            return Err(bad(line));
        };
        let k: usize = k.parse().map_err(|_| bad(line))?;
        if k != terms.len() + 1 {
            return Err(bad(line));
        }
        terms.push(a.parse().map_err(|_| bad(line))?);
    }
    Ok(terms)
}

//! The `cyclord` command line.
//!
//! Results go to standard output, diagnostics and progress to standard error.
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0    | success (for `verify`: the range is totally ordered) |
//! | 1    | runtime error |
//! | 2    | usage error |
//! | 3    | an incomparable pair was found |
//! | 4    | checkpoint failed validation |
//! | 130  | interrupted; the checkpoint, if any, has been flushed |

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::AtomicBool;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use crate::arith::{inverse_totient, totient};
use crate::comparator::{compare, compare_fast, Verdict};
use crate::cyclotomic::{cyclo, CycloCache};
use crate::order::format::{write_chain, OutputFormat};
use crate::order::{
    build_chain_with, check_conjecture2, phi_classes, ChainOptions, ChainReport, ClassSummary,
};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCOMPARABLE: i32 = 3;
pub const EXIT_CHECKPOINT: i32 = 4;
pub const EXIT_INTERRUPTED: i32 = 130;

#[derive(Debug, Parser)]
#[command(name = "cyclord", version, about = "Cyclotomic ordering of the positive integers")]
pub struct RunConfig {
    /// Worker threads for chain building and verification.
    #[arg(long, short = 'j', global = true, default_value_t = 1,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,

    #[arg(long, short = 'f', global = true, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,

    /// Resume from and record progress in this file (`verify`, `chain`).
    #[arg(long, global = true)]
    pub checkpoint: Option<PathBuf>,

    /// Suppress progress on standard error.
    #[arg(long, short = 'q', global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the coefficients of Φ_n, and optionally Φ_n(q).
    Cyclo {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        q: Option<BigInt>,
    },
    /// Decide m against n for all q >= 2.
    Compare {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Print the certificate as a JSON line.
        #[arg(long)]
        certificate: bool,
        /// Use the totient and odd/double shortcuts where they apply.
        #[arg(long)]
        fast: bool,
    },
    /// Print the stable prefix of the chain on 1..=range_max.
    Chain {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        range_max: u64,
    },
    /// Check that 1..=range_max is totally ordered.
    Verify {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        range_max: u64,
    },
    /// Check whether 2·3^i precedes 3^i for i = 1..=i_max.
    Conjecture2 {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=39))]
        i_max: u32,
    },
    /// List every x with φ(x) = v.
    Invtot {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        v: u64,
    },
    /// Print φ(n), or with --classes the totient classes of 1..=n.
    Phi {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        classes: bool,
    },
}

/// Parse `args` (including the program name) and run, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, stop: Option<Arc<AtomicBool>>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&config, out, err, stop) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::CheckpointHash { .. } | Error::CheckpointMismatch(_) => EXIT_CHECKPOINT,
                Error::Interrupted => EXIT_INTERRUPTED,
                Error::Incomparable { .. } => EXIT_INCOMPARABLE,
                Error::QTooSmall(_) | Error::InvalidArgument(_) => EXIT_USAGE,
                _ => EXIT_ERROR,
            }
        }
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn execute(
    config: &RunConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
    stop: Option<Arc<AtomicBool>>,
) -> crate::Result<i32> {
    let structured = config.format == OutputFormat::Structured;
    match &config.command {
        Command::Cyclo { n, q } => {
            if let Some(q) = q {
                if *q < BigInt::from(2) {
                    return Err(Error::QTooSmall(q.to_string()));
                }
            }
            let poly = cyclo(*n, &mut CycloCache::new())?;
            let coeffs = join(poly.coeffs(), if structured { "," } else { " " });
            let value = q.as_ref().map(|q| poly.eval_at(q));
            if structured {
                let value = value.map_or("null".to_string(), |v| v.to_string());
                writeln!(out, "{{\"n\":{n},\"coefficients\":[{coeffs}],\"value\":{value}}}")?;
            } else {
                writeln!(out, "# coefficients of Phi_{n}(t), ascending degree from t^0")?;
                writeln!(out, "{coeffs}")?;
                if let Some(v) = value {
                    writeln!(out, "{v}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Compare { m, n, certificate, fast } => {
            let mut cache = CycloCache::new();
            let (verdict, line) = if *fast {
                let r = compare_fast(*m, *n, &mut cache)?;
                (r.verdict, r.to_line())
            } else {
                let (v, cert) = compare(*m, *n, &mut cache)?;
                (v, cert.to_line())
            };
            writeln!(out, "{verdict}")?;
            if *certificate || structured {
                writeln!(out, "{line}")?;
            }
            Ok(if verdict == Verdict::Incomparable { EXIT_INCOMPARABLE } else { EXIT_OK })
        }
        Command::Chain { range_max } => {
            let report = chain(config, *range_max, err, stop, false)?;
            write_chain(&report, config.format, out)?;
            writeln!(
                err,
                "stable prefix {} of {}; compares {}; ties {}; incomparable pairs {}",
                report.stable_prefix_len,
                report.sequence.len(),
                report.pair_count,
                report.tie_pairs.len(),
                report.incomparable_pairs.len()
            )?;
            Ok(if report.is_total_order() { EXIT_OK } else { EXIT_INCOMPARABLE })
        }
        Command::Verify { range_max } => {
            let started = Instant::now();
            let report = chain(config, *range_max, err, stop, !config.quiet)?;
            if structured {
                serde_json::to_writer(&mut *out, &report)?;
                writeln!(out)?;
            } else {
                write_verify_summary(&report, out)?;
            }
            if !config.quiet {
                writeln!(err, "elapsed {:.2}s", started.elapsed().as_secs_f64())?;
            }
            Ok(if report.is_total_order() { EXIT_OK } else { EXIT_INCOMPARABLE })
        }
        Command::Conjecture2 { i_max } => {
            for (i, r) in check_conjecture2(*i_max)? {
                if structured {
                    writeln!(out, "{}", serde_json::json!({ "i": i, "report": r }))?;
                } else if r.holds {
                    writeln!(out, "i={i} HOLDS")?;
                } else {
                    writeln!(out, "i={i} FAILS blockers=[{}]", join(&r.blockers, ","))?;
                }
                if !r.undecided.is_empty() {
                    writeln!(err, "i={i} undecided candidates: {}", join(&r.undecided, ","))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Invtot { v } => {
            let xs = inverse_totient(*v)?;
            if structured {
                writeln!(out, "{}", serde_json::json!({ "v": v, "preimages": xs }))?;
            } else {
                writeln!(out, "{}", join(&xs, " "))?;
            }
            Ok(EXIT_OK)
        }
        Command::Phi { n, classes } => {
            if *classes {
                for c in phi_classes(*n)? {
                    if structured {
                        writeln!(out, "{}", serde_json::to_string(&c)?)?;
                    } else {
                        writeln!(out, "{}: {}", c.phi_value, join(&c.members, " "))?;
                    }
                }
            } else {
                writeln!(out, "{}", totient(*n)?)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn chain(
    config: &RunConfig,
    range_max: u64,
    err: &mut dyn Write,
    stop: Option<Arc<AtomicBool>>,
    progress: bool,
) -> crate::Result<ChainReport> {
    let mut count = 0usize;
    let on_class = move |s: &ClassSummary| {
        count += 1;
        let _ = writeln!(
            err,
            "[{count}] phi={} members={} compares={} max_c={} ties={} incomparable={}",
            s.phi_value,
            s.ordered.len(),
            s.compares,
            s.max_threshold_c,
            s.ties.len(),
            s.incomparable.len()
        );
    };
    let opts = ChainOptions {
        workers: usize::try_from(config.workers).map_err(|_| Error::Overflow)?,
        checkpoint: config.checkpoint.clone(),
        progress: progress.then(|| Box::new(on_class) as Box<dyn FnMut(&ClassSummary)>),
        stop,
    };
    build_chain_with(range_max, opts)
}

fn write_verify_summary(report: &ChainReport, out: &mut dyn Write) -> crate::Result<()> {
    writeln!(out, "range 1..={}", report.range_max)?;
    writeln!(out, "classes {}", report.class_count)?;
    writeln!(out, "compares {}", report.pair_count)?;
    writeln!(out, "max_threshold_c {}", report.max_threshold_c)?;
    writeln!(out, "ties {}", report.tie_pairs.len())?;
    for t in &report.tie_pairs {
        writeln!(out, "tie {} {} q={}", t.m, t.n, t.q)?;
    }
    if report.is_total_order() {
        writeln!(out, "VERDICT TOTAL-ORDER")?;
    } else {
        writeln!(out, "VERDICT INCOMPARABLE-PAIRS {}", report.incomparable_pairs.len())?;
        for cert in &report.incomparable_pairs {
            writeln!(out, "{}", cert.to_line())?;
        }
    }
    Ok(())
}

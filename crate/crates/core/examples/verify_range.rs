//! Parallel, resumable verification that 1..=N is totally ordered.
//!
//! cargo run --release --example verify_range -- 20000 4 /tmp/cyclord.json
//!
//! Interrupt and rerun with the same checkpoint path to resume.

use std::path::PathBuf;

use cyclotomic_order::order::{build_chain_with, ChainOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let range: u64 = args.next().map_or(Ok(5000), |s| s.parse())?;
    let workers: usize = args.next().map_or(Ok(2), |s| s.parse())?;
    let checkpoint = args.next().map(PathBuf::from);

    let mut finished = 0usize;
    let opts = ChainOptions {
        workers,
        checkpoint,
        progress: Some(Box::new(|class| {
            finished += 1;
            if finished.is_multiple_of(250) {
                eprintln!("{finished} classes done (last: phi = {})", class.phi_value);
            }
        })),
        stop: None,
    };
    let report = build_chain_with(range, opts)?;
    println!(
        "1..={range}: {} classes, {} compares, max c = {}, {} ties, {} incomparable pairs",
        report.class_count,
        report.pair_count,
        report.max_threshold_c,
        report.tie_pairs.len(),
        report.incomparable_pairs.len()
    );
    println!("{}", if report.is_total_order() { "TOTAL-ORDER" } else { "INCOMPARABLE-PAIRS" });
    Ok(())
}

//! Build the chain on 1..=N and print its stable prefix as an OEIS b-file.
//!
//! cargo run --release --example chain_bfile -- 200

use std::io;

use cyclotomic_order::order::build_chain;
use cyclotomic_order::order::format::{write_chain, OutputFormat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let range: u64 = std::env::args().nth(1).map_or(Ok(31), |s| s.parse())?;
    let report = build_chain(range, 1)?;
    eprintln!(
        "{} of {} positions are final; {} compares",
        report.stable_prefix_len,
        report.sequence.len(),
        report.pair_count
    );
    write_chain(&report, OutputFormat::OeisBfile, &mut io::stdout().lock())?;
    Ok(())
}

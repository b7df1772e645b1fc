//! Decide m against n and show the certificate, including the split of
//! `Φ_n - Φ_m` into positive and negative parts.
//!
//! cargo run --example compare_with_certificate -- 8 5

use cyclotomic_order::comparator::compare_audited;
use cyclotomic_order::cyclotomic::CycloCache;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let m: u64 = args.next().map_or(Ok(15), |s| s.parse())?;
    let n: u64 = args.next().map_or(Ok(20), |s| s.parse())?;

    let mut cache = CycloCache::new();
    let (verdict, cert) = compare_audited(m, n, &mut cache)?;
    println!("{m} vs {n}: {verdict}");
    if let Some(split) = &cert.split {
        println!("  Phi_{n} - Phi_{m} = A - B");
        println!("  A = {}", split.positive);
        println!("  B = {}", split.negative);
    }
    println!(
        "  leading sign {} settles every q > {}; q in 2..={} checked exactly",
        cert.leading_sign, cert.threshold_c, cert.checked_q_max
    );
    println!("{}", cert.to_line());
    Ok(())
}

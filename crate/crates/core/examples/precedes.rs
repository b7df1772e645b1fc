//! Immediate predecessors: does 2·3^i precede 3^i?

use cyclotomic_order::cyclotomic::CycloCache;
use cyclotomic_order::order::{check_conjecture2, precedes};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut cache = CycloCache::new();
    for (m, n) in [(2, 6), (6, 3), (8, 5)] {
        let r = precedes(m, n, &mut cache)?;
        println!(
            "{m} precedes {n}: {} (candidates {:?}, blockers {:?})",
            r.holds, r.candidates_examined, r.blockers
        );
    }
    for (i, r) in check_conjecture2(6)? {
        let status = if r.holds { "HOLDS".to_string() } else { format!("FAILS blockers={:?}", r.blockers) };
        println!("i={i}: {} vs {}: {status}", r.m, r.n);
    }
    Ok(())
}

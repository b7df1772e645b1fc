//! Totients, inverse totients and the classes that only need internal sorting.

use cyclotomic_order::arith::{factorize, inverse_totient};
use cyclotomic_order::order::phi_classes;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in [1u64, 12, 30, 9973] {
        let f = factorize(n)?;
        println!(
            "{n}: {:?} phi={} mu={} rad={}",
            f.pairs(),
            f.totient(),
            f.moebius(),
            f.radical()
        );
    }
    for v in [1u64, 4, 14, 24] {
        println!("phi(x) = {v}: x in {:?}", inverse_totient(v)?);
    }
    let classes = phi_classes(1000)?;
    let largest = classes.iter().max_by_key(|c| c.members.len()).unwrap();
    println!(
        "1..=1000 has {} totient classes; the largest, phi = {}, has {} members",
        classes.len(),
        largest.phi_value,
        largest.members.len()
    );
    Ok(())
}

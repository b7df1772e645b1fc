//! Compute Φ_n two independent ways and check `t^n - 1 = ∏_{d | n} Φ_d(t)`.
//!
//! cargo run --example cyclotomic_polynomials -- 105

use cyclotomic_order::arith::divisors;
use cyclotomic_order::cyclotomic::{cyclo, cyclo_moebius, CycloCache};
use cyclotomic_order::intpoly::IntPoly;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u64 = std::env::args().nth(1).map_or(Ok(12), |s| s.parse())?;
    let mut cache = CycloCache::new();

    let phi = cyclo(n, &mut cache)?;
    println!("Phi_{n}(t) = {phi}");
    println!("degree {:?}, max |coefficient| {}", phi.degree(), phi.max_abs_coeff());
    assert_eq!(*phi, cyclo_moebius(n)?, "the two constructions disagree");

    let mut product = IntPoly::one();
    for d in divisors(n)? {
        product = &product * &*cyclo(d, &mut cache)?;
    }
    assert_eq!(product, IntPoly::t_pow_minus_one(n as usize));
    println!("product over the {} divisors of {n} is t^{n} - 1", divisors(n)?.len());
    Ok(())
}

//! Which pairs need polynomial work, and which are settled by the totient or
//! the odd/double rule.

use cyclotomic_order::comparator::{compare, compare_fast, Route};
use cyclotomic_order::cyclotomic::CycloCache;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut cache = CycloCache::new();
    for (m, n) in [(3, 10), (9, 18), (15, 30), (8, 5), (16, 20), (105, 210)] {
        let fast = compare_fast(m, n, &mut cache)?;
        let how = match &fast.route {
            Route::Totient { phi_m, phi_n } => format!("totients {phi_m} vs {phi_n}"),
            Route::OddDouble { odd, mu } => format!("odd/double with mu(rad {odd}) = {mu}"),
            Route::Full(cert) => format!("full comparison, c = {}", cert.threshold_c),
        };
        assert_eq!(fast.verdict, compare(m, n, &mut cache)?.0);
        println!("{m:>4} vs {n:<4} {:<8} {how}", fast.verdict.as_str());
    }
    Ok(())
}

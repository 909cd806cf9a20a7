//! Pairing the counting distribution with a bump: zeros against primes and
//! the archimedean place.

use charone::zeta::{explicit_formula_check, CountingConfig, TestFunction, ZeroTable};

fn main() -> charone::Result<()> {
    let g = TestFunction::log_bump(3.0, 0.2)?;
    let zeros = ZeroTable::shipped();
    println!("{:>4} {:>16} {:>16} {:>12}", "K", "zero side", "primes + arch", "relative");
    for k in [10, 25, 50, 100] {
        let cfg = CountingConfig { zero_count: k, ..Default::default() };
        let r = explicit_formula_check(&g, &zeros, &cfg)?;
        println!("{k:>4} {:>16.12} {:>16.12} {:>12.3e}", r.zero_side, r.prime_side + r.arch_side, r.relative_discrepancy);
    }
    Ok(())
}

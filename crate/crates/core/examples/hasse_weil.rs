//! Hasse-Weil series of a counting function and their behaviour as q -> 1.

use charone::zeta::{hasse_weil_z, soule_f, zeta_log_derivative, CountingFunction};

fn main() -> charone::Result<()> {
    let line = CountingFunction::polynomial(&[1.0, 1.0]);
    let z = hasse_weil_z(4.0, 0.1, &line)?;
    println!("Z(P^1 over F_4, 0.1) = {} (closed form {})", z.value, 1.0 / (0.9 * 0.6));
    for s in [2.0, 3.0, 5.0] {
        let v = zeta_log_derivative(&line, s)?;
        println!("-zeta'/zeta({s}) = {:.15} vs {:.15}", v.value, 1.0 / (s - 1.0) + 1.0 / s);
    }
    let affine = CountingFunction::polynomial(&[0.0, 1.0]);
    for q in [1.1, 1.01, 1.001] {
        println!("F({q}, 2) = {:.6}", soule_f(q, 2.0, &affine)?.value);
    }
    Ok(())
}

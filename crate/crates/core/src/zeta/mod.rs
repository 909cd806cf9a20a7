//! Pairings of test functions with the counting distribution `N(u)` and its
//! place-by-place decomposition.
//!
//! Integrals are taken in `t = log u`, where `d*u = dt`.

mod hasse_weil;
pub mod quadrature;
mod test_function;
mod zeros;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
pub use hasse_weil::{hasse_weil_z, soule_f, zeta_log_derivative, CountingFunction, SeriesValue};
pub use quadrature::{integrate, Estimate, QuadOptions};
pub use test_function::TestFunction;
pub use zeros::{riemann_von_mangoldt, ZeroTable};

/// `(log pi + gamma_E) / 2`, the constant of the archimedean distribution.
pub const KAPPA_CONSTANT: f64 = 0.5 * (1.144_729_885_849_400_2 + 0.577_215_664_901_532_9);

/// Truncation and quadrature parameters.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CountingConfig {
    pub zero_count: usize,
    /// Initial panel width in `log u`.
    pub step: f64,
    pub prime_bound: u64,
    /// Every support must lie below this.
    pub truncation: f64,
}

impl Default for CountingConfig {
    fn default() -> Self {
        CountingConfig { zero_count: 100, step: 0.01, prime_bound: 1000, truncation: 1e6 }
    }
}

impl CountingConfig {
    fn quad(&self) -> QuadOptions {
        QuadOptions::with_step(self.step)
    }

    fn validate(&self, g: &TestFunction) -> Result<()> {
        if self.step.is_nan() || self.step <= 0.0 {
            return Err(Error::Config("quadrature step must be positive".into()));
        }
        let (_, hi) = g.support();
        if hi > self.truncation {
            return Err(Error::Config(format!(
                "support ends at {hi}, beyond the truncation {}",
                self.truncation
            )));
        }
        Ok(())
    }
}

/// `int kappa(u) f(u) d*u` for `f` supported in `(1, inf)`, where `f(1) = 0`
/// and the pairing reduces to `int u^2 f(u)/(u^2 - 1) d*u`.
pub fn archimedean_pairing(f: &TestFunction, opts: &QuadOptions) -> Estimate<f64> {
    let (a, b) = f.log_support();
    integrate(
        |t| {
            let e2 = (2.0 * t).exp();
            e2 / (e2 - 1.0) * f.eval_log(t).0
        },
        a,
        b,
        opts,
    )
}

/// The regularized pairing for an arbitrary `f` on `[1, inf)` decaying
/// faster than `u^-2`:
/// `int_1^inf (u^2 f(u) - f(1))/(u^2 - 1) d*u + c f(1)`.
///
/// Computed in `x = u^-2`, where it becomes
/// `1/2 int_0^1 (f(x^-1/2) - x f(1)) / (x (1 - x)) dx`.
pub fn kappa_pairing(f: impl Fn(f64) -> f64, opts: &QuadOptions) -> Estimate<f64> {
    let f1 = f(1.0);
    let r = integrate(
        |x: f64| {
            let fu = f(1.0 / x.sqrt());
            (fu - x * f1) / (x * (1.0 - x))
        },
        0.0,
        1.0,
        opts,
    );
    Estimate { value: 0.5 * r.value + KAPPA_CONSTANT * f1, error: 0.5 * r.error, ..r }
}

/// Primes up to `n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

/// `sum log p g(p^m)` over prime powers in the support.
pub fn prime_pairing(g: &TestFunction, prime_bound: u64) -> Result<f64> {
    let (lo, hi) = g.support();
    if (prime_bound as f64) < hi.floor() {
        return Err(Error::PrimeBoundTooSmall { pmax: prime_bound, hi });
    }
    let mut terms = Vec::new();
    for p in primes_up_to(prime_bound.min(hi.floor() as u64)) {
        let mut pm = p as f64;
        while pm < hi {
            if pm > lo {
                terms.push((p as f64).ln() * g.value(pm));
            }
            pm *= p as f64;
        }
    }
    Ok(quadrature::pairwise_sum(&terms))
}

/// The zero side `<N, g>` with its pieces.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZeroSide {
    pub value: f64,
    /// `int (u + 1) g(u) d*u`.
    pub main: f64,
    /// Contribution of each conjugate pair, in table order.
    pub pair_terms: Vec<f64>,
    pub quadrature_error: f64,
    /// `|Im|` left after adding each zero to its conjugate.
    pub imaginary_residue: f64,
}

/// `<N, g> = int (u+1) g d*u + sum_rho int u^{rho+1}/(rho+1) (g(u)/u)' du`,
/// summed over the first `k` zeros and their conjugates.
pub fn zero_side_pairing(
    g: &TestFunction,
    zeros: &ZeroTable,
    k: usize,
    opts: &QuadOptions,
) -> Result<ZeroSide> {
    if k > zeros.len() {
        return Err(Error::Config(format!("{k} zeros requested, table has {}", zeros.len())));
    }
    let (a, b) = g.log_support();
    let main = integrate(|t| (t.exp() + 1.0) * g.eval_log(t).0, a, b, opts);
    let mut error = main.error;
    let mut pair_terms = Vec::with_capacity(k);
    let mut imag = Vec::with_capacity(k);
    for &gamma in &zeros.ordinates()[..k] {
        let mut pair = Complex64::new(0.0, 0.0);
        for rho in [Complex64::new(0.5, gamma), Complex64::new(0.5, -gamma)] {
            // u^{rho+1}/(rho+1) (g/u)' du = e^{rho t} (G' - G) dt / (rho+1)
            let r = integrate(
                |t| {
                    let (gv, dg) = g.eval_log(t);
                    (rho * t).exp() * (dg - gv)
                },
                a,
                b,
                opts,
            );
            error += r.error / (rho + 1.0).norm();
            pair += r.value / (rho + 1.0);
        }
        pair_terms.push(pair.re);
        imag.push(pair.im);
    }
    let zero_sum = quadrature::pairwise_sum(&pair_terms);
    Ok(ZeroSide {
        value: main.value + zero_sum,
        main: main.value,
        pair_terms,
        quadrature_error: error,
        imaginary_residue: quadrature::pairwise_sum(&imag).abs(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub zero_side: f64,
    pub prime_side: f64,
    pub arch_side: f64,
    /// `|zero_side - (prime_side + arch_side)|`.
    pub discrepancy: f64,
    pub relative_discrepancy: f64,
    pub quadrature_error: f64,
    /// Largest pair contribution among the last five zeros used.
    pub zero_truncation_estimate: f64,
    pub imaginary_residue: f64,
    pub zeros_used: usize,
    pub simple_zeros_assumed: bool,
    pub config: CountingConfig,
}

/// Compares the zero side of the explicit formula with the sum of the
/// finite places and the archimedean place.
pub fn explicit_formula_check(
    g: &TestFunction,
    zeros: &ZeroTable,
    cfg: &CountingConfig,
) -> Result<Report> {
    cfg.validate(g)?;
    let opts = cfg.quad();
    let zs = zero_side_pairing(g, zeros, cfg.zero_count, &opts)?;
    let prime_side = prime_pairing(g, cfg.prime_bound)?;
    let arch = archimedean_pairing(g, &opts);
    let discrepancy = (zs.value - (prime_side + arch.value)).abs();
    let relative_discrepancy = if zs.value != 0.0 { discrepancy / zs.value.abs() } else { discrepancy };
    let tail = zs.pair_terms.iter().rev().take(5).fold(0.0f64, |m, x| m.max(x.abs()));
    Ok(Report {
        zero_side: zs.value,
        prime_side,
        arch_side: arch.value,
        discrepancy,
        relative_discrepancy,
        quadrature_error: zs.quadrature_error + arch.error,
        zero_truncation_estimate: tail,
        imaginary_residue: zs.imaginary_residue,
        zeros_used: cfg.zero_count,
        simple_zeros_assumed: true,
        config: *cfg,
    })
}

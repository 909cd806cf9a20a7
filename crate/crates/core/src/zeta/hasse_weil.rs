//! Hasse-Weil series for a counting function `N(q^r)` and their `q -> 1`
//! limit.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::quadrature::{integrate, QuadOptions};
use crate::error::{Error, Result};

/// A counting function `N(u)`.
#[derive(Clone)]
pub enum CountingFunction {
    /// `sum c_k u^k`.
    Polynomial(Vec<f64>),
    /// Any function bounded by a multiple of `u^growth`.
    Custom { f: Arc<dyn Fn(f64) -> f64 + Send + Sync>, growth: f64 },
}

impl fmt::Debug for CountingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountingFunction::Polynomial(c) => write!(f, "Polynomial({c:?})"),
            CountingFunction::Custom { growth, .. } => write!(f, "Custom(growth {growth})"),
        }
    }
}

impl CountingFunction {
    pub fn polynomial(coeffs: &[f64]) -> Self {
        CountingFunction::Polynomial(coeffs.to_vec())
    }

    pub fn custom(f: impl Fn(f64) -> f64 + Send + Sync + 'static, growth: f64) -> Self {
        CountingFunction::Custom { f: Arc::new(f), growth }
    }

    pub fn eval(&self, u: f64) -> f64 {
        match self {
            CountingFunction::Polynomial(c) => c.iter().rev().fold(0.0, |acc, &ck| acc * u + ck),
            CountingFunction::Custom { f, .. } => f(u),
        }
    }

    /// Exponent of polynomial growth; `None` for the zero function.
    pub fn growth(&self) -> Option<f64> {
        match self {
            CountingFunction::Polynomial(c) => c.iter().rposition(|&x| x != 0.0).map(|k| k as f64),
            CountingFunction::Custom { growth, .. } => Some(*growth),
        }
    }
}

/// A truncated series with a bound on the omitted tail.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: f64,
    pub tail_bound: f64,
    pub terms: usize,
}

const MAX_TERMS: usize = 10_000_000;

/// `sum_{r >= 1} term(r)` for terms that eventually decay geometrically.
fn geometric_tail_sum(mut term: impl FnMut(usize) -> f64) -> Result<SeriesValue> {
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut prev = f64::NAN;
    for r in 1..=MAX_TERMS {
        let t = term(r);
        if !t.is_finite() {
            return Err(Error::Divergence(format!("term {r} is not finite")));
        }
        // Kahan summation keeps long slowly decaying series accurate
        let y = t - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        let ratio = if prev == 0.0 || prev.is_nan() { 0.0 } else { (t / prev).abs() };
        if r > 1 && ratio < 1.0 {
            let tail = t.abs() * ratio / (1.0 - ratio);
            if tail <= 1e-16 * sum.abs().max(1e-300) || (t == 0.0 && prev == 0.0) {
                return Ok(SeriesValue { value: sum, tail_bound: tail, terms: r });
            }
        }
        if r > 1000 && ratio > 1.0 && t.abs() > 1.0 {
            return Err(Error::Divergence(format!("terms grow at r = {r}")));
        }
        prev = t;
    }
    Err(Error::Divergence(format!("no convergence after {MAX_TERMS} terms")))
}

/// `Z(q, T) = exp(sum_{r >= 1} N(q^r) T^r / r)`.
pub fn hasse_weil_z(q: f64, t: f64, n: &CountingFunction) -> Result<SeriesValue> {
    if q.is_nan() || q <= 1.0 {
        return Err(Error::Config("q must exceed 1".into()));
    }
    let s = geometric_tail_sum(|r| n.eval(q.powi(r as i32)) * t.powi(r as i32) / r as f64)?;
    let value = s.value.exp();
    Ok(SeriesValue { value, tail_bound: value * s.tail_bound.exp_m1(), terms: s.terms })
}

/// `F(q, s) = -d/ds sum_{r >= 1} N(q^r) q^{-rs} / r = sum N(q^r) q^{-rs} log q`.
pub fn soule_f(q: f64, s: f64, n: &CountingFunction) -> Result<SeriesValue> {
    if q.is_nan() || q <= 1.0 {
        return Err(Error::Config("q must exceed 1".into()));
    }
    if let Some(k) = n.growth() {
        if s <= k {
            return Err(Error::Divergence(format!("s = {s} does not exceed the growth {k}")));
        }
    }
    let lq = q.ln();
    let sv = geometric_tail_sum(|r| {
        let x = r as f64 * lq;
        n.eval(x.exp()) * (-s * x).exp() * lq
    })?;
    Ok(sv)
}

/// `-zeta_N'/zeta_N (s) = int_1^inf N(u) u^{-s} d*u`, integrated numerically
/// up to `u = e^cut` and closed with the exact tail for polynomials.
pub fn zeta_log_derivative(n: &CountingFunction, s: f64) -> Result<SeriesValue> {
    let Some(k) = n.growth() else {
        return Ok(SeriesValue { value: 0.0, tail_bound: 0.0, terms: 0 });
    };
    if s <= k {
        return Err(Error::Divergence(format!("s = {s} does not exceed the growth {k}")));
    }
    // the integrand decays like e^{-(s-k)t}
    let cut = 40.0 / (s - k);
    let body = integrate(|t| n.eval(t.exp()) * (-s * t).exp(), 0.0, cut, &QuadOptions::with_step(0.5));
    let (tail, tail_bound) = match n {
        CountingFunction::Polynomial(c) => {
            let tail = c
                .iter()
                .enumerate()
                .map(|(j, &cj)| cj * ((j as f64 - s) * cut).exp() / (s - j as f64))
                .sum();
            (tail, 0.0)
        }
        CountingFunction::Custom { .. } => {
            let u = cut.exp();
            (0.0, n.eval(u).abs() * u.powf(-s) / (s - k))
        }
    };
    Ok(SeriesValue {
        value: body.value + tail,
        tail_bound: tail_bound + body.error,
        terms: body.evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn projective_line_z() {
        let n = CountingFunction::polynomial(&[1.0, 1.0]);
        for (q, t) in [(2.0, 0.3), (5.0, -0.1), (1.5, 0.5)] {
            let z = hasse_weil_z(q, t, &n).unwrap();
            close(z.value, 1.0 / ((1.0 - t) * (1.0 - q * t)), 1e-12);
        }
        close(hasse_weil_z(3.0, 0.2, &CountingFunction::polynomial(&[])).unwrap().value, 1.0, 0.0);
        close(hasse_weil_z(3.0, 0.2, &CountingFunction::polynomial(&[1.0])).unwrap().value, 1.25, 1e-14);
        assert!(matches!(hasse_weil_z(2.0, 0.6, &n), Err(Error::Divergence(_))));
    }

    #[test]
    fn soule_limits() {
        let n = CountingFunction::polynomial(&[0.0, 1.0]);
        let q: f64 = 1.001;
        let closed = q.ln() * q.powf(-1.0) / (1.0 - q.powf(-1.0));
        let f = soule_f(q, 2.0, &n).unwrap();
        close(f.value, closed, 1e-12);
        assert!((f.value - 1.0).abs() < 1e-3);
        close(soule_f(1.0001, 3.0, &n).unwrap().value, 0.5, 1e-4);
        assert_eq!(soule_f(1.01, 2.0, &CountingFunction::polynomial(&[])).unwrap().value, 0.0);
        assert!(soule_f(1.01, 1.0, &n).is_err());
    }

    #[test]
    fn log_derivatives() {
        let p1 = CountingFunction::polynomial(&[1.0, 1.0]);
        for s in [2.0, 3.0, 5.0] {
            close(zeta_log_derivative(&p1, s).unwrap().value, 1.0 / (s - 1.0) + 1.0 / s, 1e-12);
        }
        close(zeta_log_derivative(&CountingFunction::polynomial(&[0.0, 1.0]), 2.0).unwrap().value, 1.0, 1e-12);
        assert_eq!(zeta_log_derivative(&CountingFunction::polynomial(&[]), 2.0).unwrap().value, 0.0);
        let custom = CountingFunction::custom(|u| u * u, 2.0);
        close(zeta_log_derivative(&custom, 4.0).unwrap().value, 0.5, 1e-10);
    }
}

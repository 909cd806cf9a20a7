//! Smooth test functions compactly supported in `(1, inf)`.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum TestFunction {
    /// `exp(1 - 1/(1 - s^2))` with `s = log(u/center)/width`, zero for `|s| >= 1`.
    LogBump { center: f64, width: f64 },
    /// Equal to 1 on `[lo + ramp, hi - ramp]`, with smooth ramps down to 0 at
    /// `lo` and `hi`.
    Plateau { lo: f64, hi: f64, ramp: f64 },
    /// Hermite interpolation in `log u` through `(u_i, g_i)`; the end values
    /// must vanish.
    Tabulated { nodes: Vec<f64>, values: Vec<f64> },
}

/// `e^{-1/x}` for `x > 0`, else 0, with its derivative.
fn flat(x: f64) -> (f64, f64) {
    if x <= 0.0 {
        (0.0, 0.0)
    } else {
        let v = (-1.0 / x).exp();
        (v, v / (x * x))
    }
}

/// Smooth step from 0 at `x <= 0` to 1 at `x >= 1`.
fn step(x: f64) -> (f64, f64) {
    let (a, da) = flat(x);
    let (b, db) = flat(1.0 - x);
    let s = a + b;
    (a / s, (da * b + a * db) / (s * s))
}

impl TestFunction {
    pub fn log_bump(center: f64, width: f64) -> Result<Self> {
        let g = TestFunction::LogBump { center, width };
        if !(width > 0.0 && center.is_finite()) {
            return Err(Error::Config("bump needs a positive width".into()));
        }
        g.check_support()?;
        Ok(g)
    }

    pub fn plateau(lo: f64, hi: f64, ramp: f64) -> Result<Self> {
        if !(ramp > 0.0 && lo + 2.0 * ramp <= hi) {
            return Err(Error::Config("plateau needs 0 < 2 ramp <= hi - lo".into()));
        }
        let g = TestFunction::Plateau { lo, hi, ramp };
        g.check_support()?;
        Ok(g)
    }

    pub fn tabulated(nodes: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if nodes.len() != values.len() || nodes.len() < 3 {
            return Err(Error::Config("need at least three nodes with values".into()));
        }
        if nodes.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Config("nodes must increase".into()));
        }
        if values[0] != 0.0 || values[values.len() - 1] != 0.0 {
            return Err(Error::Config("tabulated function must vanish at both ends".into()));
        }
        let g = TestFunction::Tabulated { nodes, values };
        g.check_support()?;
        Ok(g)
    }

    /// The function that vanishes identically, supported in `[lo, hi]`.
    pub fn zero(lo: f64, hi: f64) -> Result<Self> {
        TestFunction::tabulated(vec![lo, 0.5 * (lo + hi), hi], vec![0.0; 3])
    }

    fn check_support(&self) -> Result<()> {
        let (lo, hi) = self.support();
        if !(lo > 1.0 && hi.is_finite() && lo < hi) {
            return Err(Error::SupportViolation { lo, hi });
        }
        Ok(())
    }

    pub fn support(&self) -> (f64, f64) {
        match self {
            TestFunction::LogBump { center, width } => {
                (center * (-width).exp(), center * width.exp())
            }
            TestFunction::Plateau { lo, hi, .. } => (*lo, *hi),
            TestFunction::Tabulated { nodes, .. } => (nodes[0], nodes[nodes.len() - 1]),
        }
    }

    /// Support in `t = log u`.
    pub fn log_support(&self) -> (f64, f64) {
        let (lo, hi) = self.support();
        (lo.ln(), hi.ln())
    }

    /// `g(u)` and `g'(u)`.
    pub fn eval(&self, u: f64) -> (f64, f64) {
        match self {
            TestFunction::LogBump { center, width } => {
                let s = (u / center).ln() / width;
                if s.abs() >= 1.0 {
                    return (0.0, 0.0);
                }
                let d = 1.0 - s * s;
                let g = (1.0 - 1.0 / d).exp();
                // dg/ds = g * (-2s/d^2), ds/du = 1/(u width)
                (g, g * (-2.0 * s / (d * d)) / (u * width))
            }
            TestFunction::Plateau { lo, hi, ramp } => {
                let (up, dup) = step((u - lo) / ramp);
                let (down, ddown) = step((hi - u) / ramp);
                (up * down, (dup * down - up * ddown) / ramp)
            }
            TestFunction::Tabulated { nodes, values } => hermite(nodes, values, u),
        }
    }

    pub fn value(&self, u: f64) -> f64 {
        self.eval(u).0
    }

    /// `G(t) = g(e^t)` and `G'(t) = e^t g'(e^t)`.
    pub fn eval_log(&self, t: f64) -> (f64, f64) {
        let u = t.exp();
        let (g, dg) = self.eval(u);
        (g, u * dg)
    }
}

/// Cubic Hermite interpolation in `log u` with centered slopes and zero end slopes.
fn hermite(nodes: &[f64], values: &[f64], u: f64) -> (f64, f64) {
    let n = nodes.len();
    if u <= nodes[0] || u >= nodes[n - 1] {
        return (0.0, 0.0);
    }
    let t = u.ln();
    let ts: Vec<f64> = nodes.iter().map(|x| x.ln()).collect();
    let slope = |i: usize| {
        if i == 0 || i == n - 1 {
            0.0
        } else {
            (values[i + 1] - values[i - 1]) / (ts[i + 1] - ts[i - 1])
        }
    };
    let i = ts.partition_point(|&x| x <= t) - 1;
    let h = ts[i + 1] - ts[i];
    let x = (t - ts[i]) / h;
    let (x2, x3) = (x * x, x * x * x);
    let (y0, y1, m0, m1) = (values[i], values[i + 1], slope(i) * h, slope(i + 1) * h);
    let g = (2.0 * x3 - 3.0 * x2 + 1.0) * y0
        + (x3 - 2.0 * x2 + x) * m0
        + (-2.0 * x3 + 3.0 * x2) * y1
        + (x3 - x2) * m1;
    let dgdx = (6.0 * x2 - 6.0 * x) * y0
        + (3.0 * x2 - 4.0 * x + 1.0) * m0
        + (-6.0 * x2 + 6.0 * x) * y1
        + (3.0 * x2 - 2.0 * x) * m1;
    // dg/du = dg/dx * dx/dt * dt/du
    (g, dgdx / h / u)
}

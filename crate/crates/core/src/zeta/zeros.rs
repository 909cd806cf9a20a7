//! Ordinates of nontrivial zeros, read from plain text.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

const SHIPPED: &str = include_str!("../../data/zeros100.txt");

/// Imaginary parts `gamma_k` of the zeros `1/2 + i gamma_k`, increasing.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    source: Option<PathBuf>,
}

/// Smooth part of the zero counting function,
/// `(T/2pi) log(T/2pi) - T/2pi + 7/8`.
pub fn riemann_von_mangoldt(t: f64) -> f64 {
    let x = t / (2.0 * PI);
    x * x.ln() - x + 0.875
}

impl ZeroTable {
    /// One ordinate per line; `#` starts a comment.
    pub fn parse(text: &str, source: Option<PathBuf>) -> Result<Self> {
        let mut ordinates = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let v: f64 = line
                .parse()
                .map_err(|_| Error::InvalidZeros(format!("line {}: {line:?}", lineno + 1)))?;
            ordinates.push(v);
        }
        ZeroTable::from_ordinates(ordinates, source)
    }

    pub fn from_ordinates(ordinates: Vec<f64>, source: Option<PathBuf>) -> Result<Self> {
        if ordinates.is_empty() {
            return Err(Error::InvalidZeros("no ordinates".into()));
        }
        if let Some(v) = ordinates.iter().find(|&&v| !(v > 14.0 && v.is_finite())) {
            return Err(Error::InvalidZeros(format!("ordinate {v} is not above 14")));
        }
        if let Some(w) = ordinates.windows(2).find(|w| w[1] <= w[0]) {
            return Err(Error::InvalidZeros(format!("{} follows {}", w[1], w[0])));
        }
        for (k, &t) in ordinates.iter().enumerate() {
            // the k-th zero sits where the count jumps from k-1 to k
            let expected = riemann_von_mangoldt(t);
            let count = k as f64 + 0.5;
            if (count - expected).abs() > 2.0 {
                return Err(Error::InvalidZeros(format!(
                    "zero #{} at {t} disagrees with the Riemann-von Mangoldt count {expected:.2}",
                    k + 1
                )));
            }
        }
        Ok(ZeroTable { ordinates, source })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidZeros(format!("{}: {e}", path.display())))?;
        ZeroTable::parse(&text, Some(path.to_path_buf()))
    }

    /// The first 100 zeros bundled with the crate.
    pub fn shipped() -> Self {
        ZeroTable::parse(SHIPPED, None).expect("bundled zero table is valid")
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    pub fn source(&self) -> Option<&Path> {
        self.source.as_deref()
    }
}

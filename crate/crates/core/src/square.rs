//! The tensor square `Z_min (x)_B Z_min` as hereditary subsets of `Z x Z`.
//!
//! A hereditary set is a finite union of quadrants `(a, b) + N x N`; it is
//! stored as the minimal antichain of its corners, sorted by `a`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::slope::Slope;
use crate::tropical::{Semiring, ZminElem};

pub type Point = (i64, i64);

/// A canonical staircase. The empty corner list is the semiring zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "StaircaseJson", into = "StaircaseJson")]
pub struct Staircase {
    corners: Vec<Point>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StaircaseJson {
    corners: Vec<Point>,
}

impl From<StaircaseJson> for Staircase {
    fn from(raw: StaircaseJson) -> Self {
        Staircase::canonicalize(raw.corners)
    }
}

impl From<Staircase> for StaircaseJson {
    fn from(s: Staircase) -> Self {
        StaircaseJson { corners: s.corners }
    }
}

/// Sorts and removes dominated points, leaving `a` strictly increasing and
/// `b` strictly decreasing.
pub(crate) fn minimal_antichain(mut points: Vec<Point>) -> Vec<Point> {
    points.sort_unstable();
    let mut out: Vec<Point> = Vec::with_capacity(points.len());
    for p in points {
        match out.last() {
            Some(&(_, b)) if p.1 >= b => {}
            _ => out.push(p),
        }
    }
    out
}

/// The result of evaluating a staircase at a slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    /// The minimizing corner; the value is `lambda*a + b`.
    pub argmin: Point,
    /// The exact value, when `lambda` is rational.
    pub rational: Option<BigRational>,
}

impl Staircase {
    pub fn canonicalize(points: impl Into<Vec<Point>>) -> Self {
        Staircase { corners: minimal_antichain(points.into()) }
    }

    /// The simple tensor `q^a (x) q^b`.
    pub fn monomial(a: i64, b: i64) -> Self {
        Staircase { corners: vec![(a, b)] }
    }

    /// `iota_1(q^n) = q^n (x) 1`.
    pub fn left(n: i64) -> Self {
        Staircase::monomial(n, 0)
    }

    /// `iota_2(q^n) = 1 (x) q^n`.
    pub fn right(n: i64) -> Self {
        Staircase::monomial(0, n)
    }

    pub fn corners(&self) -> &[Point] {
        &self.corners
    }

    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    /// Membership of a lattice point in the hereditary set.
    pub fn contains(&self, p: Point) -> bool {
        self.corners.iter().any(|&(a, b)| p.0 >= a && p.1 >= b)
    }

    /// All corners in `N x N`.
    pub fn is_positive(&self) -> bool {
        self.corners.iter().all(|&(a, b)| a >= 0 && b >= 0)
    }

    /// Largest absolute coordinate, 0 for the zero element.
    pub fn max_coordinate(&self) -> i64 {
        self.corners.iter().map(|&(a, b)| a.abs().max(b.abs())).max().unwrap_or(0)
    }

    /// `Fr_{n,m}`: `(a, b) -> (n a, m b)`.
    pub fn frobenius(&self, n: i64, m: i64) -> Self {
        assert!(n >= 1 && m >= 1, "Frobenius indices must be positive");
        Staircase { corners: self.corners.iter().map(|&(a, b)| (n * a, m * b)).collect() }
    }

    /// Multiplication by the unit `q^k (x) q^l`.
    pub fn translate(&self, k: i64, l: i64) -> Self {
        Staircase { corners: self.corners.iter().map(|&(a, b)| (a + k, b + l)).collect() }
    }

    /// The diagonal map to `Z_min`: `q^min(a + b)`.
    pub fn mu(&self) -> ZminElem {
        match self.corners.iter().map(|&(a, b)| a + b).min() {
            Some(v) => ZminElem::q(v),
            None => ZminElem::infinity(),
        }
    }

    /// Minimizes `lambda*a + b` over the corners; ties go to the smallest `a`.
    pub fn evaluate(&self, lambda: &Slope) -> Result<Evaluation> {
        let mut best = *self.corners.first().ok_or(Error::ZeroElement)?;
        for &(a, b) in &self.corners[1..] {
            if lambda.compare(a, b, best.0, best.1)? == Ordering::Less {
                best = (a, b);
            }
        }
        let rational = lambda
            .as_rational()
            .map(|r| r * BigInt::from(best.0) + BigInt::from(best.1));
        Ok(Evaluation { argmin: best, rational })
    }

    /// Whether `F(lambda, q)` identifies the two elements.
    pub fn congruent(&self, other: &Staircase, lambda: &Slope) -> Result<bool> {
        match (self.is_empty(), other.is_empty()) {
            (true, true) => return Ok(true),
            (true, false) | (false, true) => return Ok(false),
            _ => {}
        }
        let x = self.evaluate(lambda)?.argmin;
        let y = other.evaluate(lambda)?.argmin;
        Ok(lambda.compare(x.0, x.1, y.0, y.1)? == Ordering::Equal)
    }
}

impl Semiring for Staircase {
    fn zero() -> Self {
        Staircase { corners: Vec::new() }
    }

    fn one() -> Self {
        Staircase::monomial(0, 0)
    }

    fn add(&self, other: &Self) -> Self {
        let mut pts = Vec::with_capacity(self.len() + other.len());
        pts.extend_from_slice(&self.corners);
        pts.extend_from_slice(&other.corners);
        Staircase::canonicalize(pts)
    }

    fn mul(&self, other: &Self) -> Self {
        let mut pts = Vec::with_capacity(self.len() * other.len());
        for &(a, b) in &self.corners {
            for &(c, d) in &other.corners {
                pts.push((a + c, b + d));
            }
        }
        Staircase::canonicalize(pts)
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (a, b)) in self.corners.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "q^{a}(x)q^{b}")?;
        }
        Ok(())
    }
}

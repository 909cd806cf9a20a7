//! Newton polygons: the cancellative reduction of the staircase semiring.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::slope::Slope;
use crate::square::{minimal_antichain, Evaluation, Point, Staircase};
use crate::tropical::{Semiring, ZminElem};

/// The set `conv(extremes) + N x N`, stored by its extreme points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "PolygonJson", into = "PolygonJson")]
pub struct NewtonPolygon {
    extremes: Vec<Point>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolygonJson {
    extremes: Vec<Point>,
}

impl From<PolygonJson> for NewtonPolygon {
    fn from(raw: PolygonJson) -> Self {
        NewtonPolygon::hull(raw.extremes)
    }
}

impl From<NewtonPolygon> for PolygonJson {
    fn from(p: NewtonPolygon) -> Self {
        PolygonJson { extremes: p.extremes }
    }
}

fn cross(o: Point, a: Point, b: Point) -> i128 {
    let (ox, oy) = (o.0 as i128, o.1 as i128);
    (a.0 as i128 - ox) * (b.1 as i128 - oy) - (a.1 as i128 - oy) * (b.0 as i128 - ox)
}

/// Orders edge vectors `(dx > 0, dy < 0)` by slope `dy/dx`.
fn edge_order(e: Point, f: Point) -> Ordering {
    (e.1 as i128 * f.0 as i128).cmp(&(f.1 as i128 * e.0 as i128))
}

impl NewtonPolygon {
    /// Extreme points of `conv(points) + N x N`.
    pub fn hull(points: impl Into<Vec<Point>>) -> Self {
        let mut h: Vec<Point> = Vec::new();
        for p in minimal_antichain(points.into()) {
            while h.len() >= 2 && cross(h[h.len() - 2], h[h.len() - 1], p) <= 0 {
                h.pop();
            }
            h.push(p);
        }
        NewtonPolygon { extremes: h }
    }

    pub fn extremes(&self) -> &[Point] {
        &self.extremes
    }

    pub fn is_empty(&self) -> bool {
        self.extremes.is_empty()
    }

    /// Edge vectors between consecutive extremes.
    pub fn edges(&self) -> Vec<Point> {
        self.extremes.windows(2).map(|w| (w[1].0 - w[0].0, w[1].1 - w[0].1)).collect()
    }

    /// Whether the lattice point lies in the polygon region.
    pub fn contains(&self, p: Point) -> bool {
        let e = &self.extremes;
        let (Some(first), Some(last)) = (e.first(), e.last()) else {
            return false;
        };
        if p.0 < first.0 || p.1 < last.1 {
            return false;
        }
        if p.0 >= last.0 || p.1 >= first.1 {
            return true;
        }
        let i = e.partition_point(|q| q.0 <= p.0);
        cross(e[i - 1], e[i], p) >= 0
    }

    pub fn frobenius(&self, n: i64, m: i64) -> Self {
        assert!(n >= 1 && m >= 1, "Frobenius indices must be positive");
        NewtonPolygon { extremes: self.extremes.iter().map(|&(a, b)| (n * a, m * b)).collect() }
    }

    /// The Minkowski sum computed directly from all pairwise sums.
    pub fn mul_naive(&self, other: &Self) -> Self {
        let mut pts = Vec::with_capacity(self.extremes.len() * other.extremes.len());
        for &(a, b) in &self.extremes {
            for &(c, d) in &other.extremes {
                pts.push((a + c, b + d));
            }
        }
        NewtonPolygon::hull(pts)
    }

    pub fn mu(&self) -> ZminElem {
        match self.extremes.iter().map(|&(a, b)| a + b).min() {
            Some(v) => ZminElem::q(v),
            None => ZminElem::infinity(),
        }
    }

    pub fn evaluate(&self, lambda: &Slope) -> Result<Evaluation> {
        Staircase::canonicalize(self.extremes.clone()).evaluate(lambda)
    }
}

impl Semiring for NewtonPolygon {
    fn zero() -> Self {
        NewtonPolygon { extremes: Vec::new() }
    }

    fn one() -> Self {
        NewtonPolygon { extremes: vec![(0, 0)] }
    }

    fn add(&self, other: &Self) -> Self {
        let mut pts = self.extremes.clone();
        pts.extend_from_slice(&other.extremes);
        NewtonPolygon::hull(pts)
    }

    /// Minkowski sum by merging the two edge sequences by slope.
    fn mul(&self, other: &Self) -> Self {
        let (Some(p), Some(q)) = (self.extremes.first(), other.extremes.first()) else {
            return NewtonPolygon::zero();
        };
        let (e, f) = (self.edges(), other.edges());
        let mut cur = (p.0 + q.0, p.1 + q.1);
        let mut out = Vec::with_capacity(e.len() + f.len() + 1);
        out.push(cur);
        let (mut i, mut j) = (0, 0);
        while i < e.len() || j < f.len() {
            let step = match (e.get(i), f.get(j)) {
                (Some(&x), Some(&y)) => match edge_order(x, y) {
                    Ordering::Less => {
                        i += 1;
                        x
                    }
                    Ordering::Greater => {
                        j += 1;
                        y
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (x.0 + y.0, x.1 + y.1)
                    }
                },
                (Some(&x), None) => {
                    i += 1;
                    x
                }
                (None, Some(&y)) => {
                    j += 1;
                    y
                }
                (None, None) => unreachable!(),
            };
            cur = (cur.0 + step.0, cur.1 + step.1);
            out.push(cur);
        }
        NewtonPolygon { extremes: out }
    }
}

impl fmt::Display for NewtonPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "conv(0)");
        }
        write!(f, "conv(")?;
        for (i, (a, b)) in self.extremes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, ")")
    }
}

/// The reduction map: convex hull of the staircase.
pub fn gamma(e: &Staircase) -> NewtonPolygon {
    NewtonPolygon::hull(e.corners().to_vec())
}

/// `sigma(a, b) = sum_{0<=j<=a} q^{a-j} (x) q^{ceil(bj/a)}`.
pub fn sigma(a: i64, b: i64) -> Staircase {
    assert!(a >= 1 && b >= 1, "sigma needs positive arguments");
    Staircase::canonicalize((0..=a).map(|j| (a - j, (b * j + a - 1) / a)).collect::<Vec<_>>())
}

/// An element `c != 0` with `x c = y c`, built edge by edge from the common
/// Newton polygon.
pub fn cancellation_witness(x: &Staircase, y: &Staircase) -> Result<Staircase> {
    let hull = gamma(x);
    if hull != gamma(y) {
        return Err(Error::HullMismatch);
    }
    Ok(hull
        .extremes()
        .windows(2)
        .map(|w| sigma(w[1].0 - w[0].0, w[0].1 - w[1].1))
        .fold(Staircase::one(), |acc, s| acc.mul(&s)))
}

pub fn reduced_equal(x: &Staircase, y: &Staircase) -> bool {
    gamma(x) == gamma(y)
}

/// A class of the reduced square: a staircase representative together with
/// its Newton polygon. Equality and arithmetic go through the polygon.
#[derive(Clone, Debug)]
pub struct ReducedClass {
    representative: Staircase,
    hull: NewtonPolygon,
}

impl ReducedClass {
    pub fn new(representative: Staircase) -> Self {
        let hull = gamma(&representative);
        ReducedClass { representative, hull }
    }

    pub fn representative(&self) -> &Staircase {
        &self.representative
    }

    pub fn hull(&self) -> &NewtonPolygon {
        &self.hull
    }
}

impl PartialEq for ReducedClass {
    fn eq(&self, other: &Self) -> bool {
        self.hull == other.hull
    }
}

impl Semiring for ReducedClass {
    fn zero() -> Self {
        ReducedClass::new(Staircase::zero())
    }

    fn one() -> Self {
        ReducedClass::new(Staircase::one())
    }

    fn add(&self, other: &Self) -> Self {
        ReducedClass {
            representative: self.representative.add(&other.representative),
            hull: self.hull.add(&other.hull),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        ReducedClass {
            representative: self.representative.mul(&other.representative),
            hull: self.hull.mul(&other.hull),
        }
    }
}

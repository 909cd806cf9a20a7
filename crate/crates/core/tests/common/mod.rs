#![allow(dead_code)]

use charone::square::Point;
use charone::{NewtonPolygon, Slope, Staircase};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn points(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max: usize) -> Vec<Point> {
    let k = rng.gen_range(0..=max);
    (0..k).map(|_| (rng.gen_range(lo..=hi), rng.gen_range(lo..=hi))).collect()
}

pub fn staircase(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max: usize) -> Staircase {
    Staircase::canonicalize(points(rng, lo, hi, max))
}

pub fn polygon(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max: usize) -> NewtonPolygon {
    NewtonPolygon::hull(points(rng, lo, hi, max))
}

/// Adds lattice points of the hull region that lie outside the staircase,
/// leaving the hull unchanged.
pub fn hull_equal_partner(rng: &mut ChaCha8Rng, x: &Staircase) -> Staircase {
    let hull = NewtonPolygon::hull(x.corners().to_vec());
    let m = x.max_coordinate();
    let lo = x.corners().iter().map(|p| p.0.min(p.1)).min().unwrap_or(0);
    let mut y = x.clone();
    for _ in 0..rng.gen_range(1..=4) {
        let p = (rng.gen_range(lo..=m), rng.gen_range(lo..=m));
        if hull.contains(p) {
            y = Staircase::canonicalize([y.corners(), &[p][..]].concat());
        }
    }
    y
}

fn is_square(d: i64) -> bool {
    let r = (d as f64).sqrt().round() as i64;
    r * r == d
}

/// A random irrational quadratic slope `(a + sqrt(d)) / c > 0`.
pub fn quadratic_slope(rng: &mut ChaCha8Rng) -> Slope {
    loop {
        let d = rng.gen_range(2..=500i64);
        if is_square(d) {
            continue;
        }
        let c = rng.gen_range(1..=30i64);
        let a = rng.gen_range(-20..=20i64);
        if let Ok(s) = Slope::quadratic(a, 1, c, d) {
            return s;
        }
    }
}

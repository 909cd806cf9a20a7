//! Reduction to Newton polygons, the cancellation element sigma(a, b) and an
//! SVG picture of sigma(6, 4).

use charone::polygon::{cancellation_witness, reduced_equal};
use charone::{gamma, sigma, Semiring, Staircase};

fn main() -> charone::Result<()> {
    let s = sigma(6, 4);
    println!("sigma(6,4) = {s}");
    println!("hull: {}", gamma(&s));
    let lhs = Staircase::left(6).add(&Staircase::right(4)).mul(&s);
    println!("(q^6(x)1 + 1(x)q^4) sigma(6,4) == sigma(12,8): {}", lhs == sigma(12, 8));

    let x = Staircase::canonicalize(vec![(0, 6), (2, 2), (6, 0)]);
    let y = x.add(&Staircase::canonicalize(vec![(1, 5), (4, 1)]));
    println!("x = {x}\ny = {y}\nsame hull: {}", reduced_equal(&x, &y));
    let w = cancellation_witness(&x, &y)?;
    println!("witness w = {w}\nxw == yw: {}", x.mul(&w) == y.mul(&w));

    let path = std::env::temp_dir().join("sigma_6_4.svg");
    std::fs::write(&path, charone::svg::render(&s, Some(&gamma(&s)))).expect("writable temp dir");
    println!("wrote {}", path.display());
    Ok(())
}

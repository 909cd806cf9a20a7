//! The tensor square of Z_min as staircases, its failure of cancellation,
//! and evaluation at a slope.

use charone::expr;
use charone::{Semiring, Slope, Staircase};

fn main() -> charone::Result<()> {
    let c = Staircase::left(1).add(&Staircase::right(1));
    let a = c.mul(&c);
    let b = Staircase::left(2).add(&Staircase::right(2));
    println!("c = {c}");
    println!("c^2 = {a}");
    println!("b = {b}, b == c^2: {}", a == b);
    println!("but c^2 * c = {} and b * c = {}", a.mul(&c), b.mul(&c));

    let v = expr::parse("mu(fr(2,3, q^1(x)q^4 + q^3(x)q^0))")?.eval()?;
    println!("mu(fr(2,3, ...)) = {v}");

    let lambda = Slope::sqrt(2)?;
    let ev = a.evaluate(&lambda)?;
    println!("min of sqrt2*a + b over c^2 attained at {:?}", ev.argmin);
    println!("c^2 and b congruent at sqrt2: {}", a.congruent(&b, &lambda)?);
    Ok(())
}

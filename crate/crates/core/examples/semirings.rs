//! The basic semifields of characteristic one and their Frobenius maps.

use charone::{BoolSemifield, RmaxElem, Semiring, ZminElem};

fn main() {
    let one = BoolSemifield::one();
    println!("B: 1 + 1 = {:?}", one.add(&one));

    let (a, b) = (ZminElem::q(3), ZminElem::q(-2));
    println!("Z_min: {a} + {b} = {}, {a} * {b} = {}", a.add(&b), a.mul(&b));
    println!("Z_min: q^inf is the zero, q^0 the unit: {}", a.add(&ZminElem::zero()) == a && a.mul(&ZminElem::one()) == a);
    println!("Fr_5({a}) = {}", a.frobenius(5));
    println!("as Z_max exponent: {:?}", a.zmax_exponent());

    let x = RmaxElem::new(0.5).expect("non-negative");
    let y = RmaxElem::new(3.0).expect("non-negative");
    println!("R_max: max(0.5, 3) = {}, 0.5 * 3 = {}", x.add(&y).value(), x.mul(&y).value());
    println!("R_max: Fr_2(3) = {}", y.frobenius(2.0).value());
}

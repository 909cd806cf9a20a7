//! Points as supernatural numbers: subgroups of Q, isomorphism, and
//! partial fractions.

use charone::points::{global_sections_check, partial_fractions, points_isomorphic, theta_image, SpecPoint};
use charone::{Supernatural, ZminElem};
use num_rational::BigRational;

fn main() -> charone::Result<()> {
    let a: Supernatural = "2^inf*3".parse()?;
    let b: Supernatural = "2^inf*3^4*5".parse()?;
    let c: Supernatural = "2^inf*3^inf".parse()?;
    println!("{a} ~ {b}: {}", points_isomorphic(&a, &b));
    println!("{a} ~ {c}: {}", points_isomorphic(&a, &c));
    for x in ["5/24", "1/9", "7/5"] {
        let x: BigRational = x.parse().expect("rational");
        println!("{x} in H({a}): {}", a.contains(&x));
    }
    println!("theta(5) = {}, theta(generic) = {}", theta_image(SpecPoint::Prime(5))?, theta_image(SpecPoint::Generic)?);

    let x = BigRational::new(101.into(), 360.into());
    let pf = partial_fractions(&x);
    println!("{x} = {} + {:?}, reassembled {}", pf.integer, pf.parts, pf.reassemble());

    let fixed: Vec<String> = [ZminElem::q(-1), ZminElem::q(0), ZminElem::q(2), ZminElem::infinity()]
        .iter()
        .filter(|z| global_sections_check(z))
        .map(|z| z.to_string())
        .collect();
    println!("fixed by every Frobenius: {fixed:?}");
    Ok(())
}

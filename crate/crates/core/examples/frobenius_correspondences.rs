//! Composition of Frobenius correspondences, Dedekind cuts and the
//! semigroups generated by two integers.

use charone::correspondences::{frobenius_number, presentation, rational_to_string, recover_pair};
use charone::{compose, make_correspondence, Slope};

fn show(l: Slope, r: Slope) -> charone::Result<()> {
    let c = compose(&make_correspondence(l.clone()), &make_correspondence(r.clone()))?;
    print!("Psi({l}) o Psi({r}) = {}", c.result);
    if let Some((s, t)) = &c.relation {
        print!("   [lambda lambda' = {} lambda' + {}]", rational_to_string(s), rational_to_string(t));
    }
    println!();
    Ok(())
}

fn main() -> charone::Result<()> {
    show(Slope::rational(2, 3)?, Slope::rational(9, 4)?)?;
    show(Slope::sqrt(2)?, Slope::sqrt(3)?)?;
    show(Slope::sqrt(2)?, Slope::quadratic(0, 1, 2, 2)?)?;
    show(Slope::sqrt(2)?, Slope::sqrt(8)?)?;

    let psi = make_correspondence(Slope::sqrt(2)?);
    for depth in [1, 5, 12, 70] {
        let (lo, hi) = psi.dedekind_cut(depth)?;
        println!("depth {depth:>2}: {} < sqrt2 <= {}", rational_to_string(&lo), rational_to_string(&hi));
    }

    let p = presentation(5, 7)?;
    println!("F(5,7): relation X^{:?}, recovered {:?}, largest gap {:?}", p.relation(), recover_pair(&p)?, frobenius_number(5, 7));
    Ok(())
}

//! Chen-Ruan products of the twisted sectors for `A_2` over `P^1`.

use crepant::chen_ruan::{age, ConventionFlags, OrbRing, TwistCoefficient};
use crepant::geometry::{BaseRing, Geometry};
use crepant::ring::{OrbClass, RingProduct};
use crepant::scalars::{frac, Rational};

pub fn run_example() -> crepant::Result<()> {
    println!("age of (1, 2) mod 3: {}", age(3, &[1, 2])?);
    let g = Geometry::standard(2, BaseRing::projective_space(1));
    let e = |a| OrbClass::<Rational>::generator(&g, a, g.base().one()).expect("sector");
    for twist in [TwistCoefficient::MinusInverse, TwistCoefficient::PlusOne] {
        let ring = OrbRing::<Rational>::new(g.clone(), ConventionFlags::with_twist(twist));
        println!("t = {twist}:");
        for (a, b) in [(1, 1), (1, 2), (2, 2)] {
            println!("  e{a} e{b} = {}", ring.mul(&e(a), &e(b))?.pretty());
        }
    }
    let ring = OrbRing::<Rational>::new(g.clone(), ConventionFlags::default());
    let he2 = OrbClass::<Rational>::generator(&g, 2, g.base().h_power(1))?;
    assert_eq!(ring.orb_pairing(&e(1), &he2)?, frac(1, 3));
    println!("(e1, h e2)_orb = {}", ring.orb_pairing(&e(1), &he2)?);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

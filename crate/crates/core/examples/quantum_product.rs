//! The quantum corrected product, symbolically and at a root of unity.

use crepant::geometry::{BaseRing, Geometry};
use crepant::quantum::{symbolic_product, QPoint, QuantumRing};
use crepant::resolution::exc_push;
use crepant::ring::RingProduct;
use crepant::scalars::CycNum;
use crepant::Error;

pub fn run_example() -> crepant::Result<()> {
    for (i, j) in [(1, 1), (1, 2), (2, 2)] {
        let p = symbolic_product(2, i, j)?;
        for (l, c) in p.coefficients.iter().enumerate() {
            println!("E{i} E{j} | E{}: {} M + ({}) K", l + 1, c.em, c.kap);
        }
    }

    let g = Geometry::standard(2, BaseRing::projective_space(1));
    let ring = QuantumRing::new(g.clone(), QPoint::parse("zeta3,zeta3")?)?;
    let e1 = exc_push(&g, 1, g.base().one::<CycNum>())?;
    println!("at q = (zeta3, zeta3): E1 * E1 = {}", ring.mul(&e1, &e1)?.pretty());

    // q1 q2 = 1 hits the pole of d(1,2)
    let ring = QuantumRing::new(g.clone(), QPoint::parse("-1,-1")?)?;
    match ring.mul(&e1, &e1) {
        Err(Error::Pole { r, s }) => println!("at q = (-1, -1): pole on span ({r},{s})"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

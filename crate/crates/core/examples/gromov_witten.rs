//! Three-point invariants in exceptional curve classes.

use crepant::cartan::{curve_class, CurveClass};
use crepant::geometry::{BaseRing, Geometry};
use crepant::gromov_witten::{gw_invariant, gw_vanishing_symplectic, GwQuery};
use crepant::resolution::exc_push;
use crepant::ring::ResClass;
use crepant::scalars::rat;

pub fn run_example() -> crepant::Result<()> {
    let g1 = Geometry::a1(BaseRing::projective_space(1), rat(1));
    let e: ResClass = exc_push(&g1, 1, g1.base().one())?;
    for a in 1..=3 {
        let q = GwQuery::new(CurveClass::new(vec![a]), [e.clone(), e.clone(), e.clone()]);
        println!("n=1  Psi_{a}b(E,E,E) = {}", gw_invariant(&q, &g1)?);
    }

    let g = Geometry::standard(3, BaseRing::projective_space(1));
    let e = |l| -> ResClass { exc_push(&g, l, g.base().one()).expect("divisor") };
    let ins: [ResClass; 3] = [e(1), e(2), e(3)];
    for (i, j) in [(1, 1), (1, 2), (2, 3), (1, 3)] {
        let q = GwQuery::new(curve_class(3, i, j)?, ins.clone());
        println!("n=3  Psi_b({i},{j})(E1,E2,E3) = {}", gw_invariant(&q, &g)?);
    }
    println!("kap = 0 forces vanishing: {}", gw_vanishing_symplectic(&Geometry::standard(3, BaseRing::point())));
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

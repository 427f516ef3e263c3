//! Symmetric `A_2` isomorphisms at roots of unity of order at most 12.

use crepant::chen_ruan::{ConventionFlags, TwistCoefficient};
use crepant::geometry::{BaseRing, Geometry};
use crepant::scalars::rat;
use crepant::verify::solve_a2_symmetric;

pub fn run_example() -> crepant::Result<()> {
    let g = Geometry::standard(2, BaseRing::projective_space(1));
    let r = solve_a2_symmetric(&g, ConventionFlags::default(), 12)?;
    println!("{} points searched", r.points_searched);
    for s in &r.solutions {
        println!("q = {}  a = {}  b = {}", s.point.q, s.a, s.b);
    }
    for p in &r.poles {
        println!("skipped zeta_{}^{}: {}", p.point.order, p.point.power, p.error);
    }

    // the other sign of the twist flips the signs of a and b
    let flipped = solve_a2_symmetric(&g, ConventionFlags::with_twist(TwistCoefficient::PlusInverse), 3)?;
    for s in &flipped.solutions {
        println!("t = +1/3: q = {}  a = {}  b = {}", s.point.q, s.a, s.b);
    }

    let symplectic = Geometry::an(2, BaseRing::projective_space(1), rat(1), rat(-1), rat(0))?;
    let r = solve_a2_symmetric(&symplectic, ConventionFlags::default(), 6)?;
    println!("kap = 0: {} solutions over {} pole-free points", r.solutions.len(), r.points_searched - r.poles.len());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

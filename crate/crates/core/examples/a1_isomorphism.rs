//! The `A_1` isomorphism at `q = -1`: only `c = +-i/2` works.

use crepant::geometry::{BaseRing, Geometry};
use crepant::quantum::QPoint;
use crepant::scalars::rat;
use crepant::verify::{a1_scalar_test_set, verify_a1};

pub fn run_example() -> crepant::Result<()> {
    let g = Geometry::a1(BaseRing::projective_space(1), rat(1));
    let q = QPoint::parse("-1")?;
    let set = a1_scalar_test_set();
    let mut passing = Vec::new();
    for c in &set {
        if verify_a1(&g, &q, c)?.pass {
            passing.push(c.to_string());
        }
    }
    println!("{} scalars tested, passing: {}", set.len(), passing.join(", "));

    let r = verify_a1(&g, &q, &crepant::scalars::parse_scalar("1/2")?)?;
    for v in r.violations.iter().take(3) {
        println!("c = 1/2 fails on {} [{}]: {}", v.pair, v.component, v.difference);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

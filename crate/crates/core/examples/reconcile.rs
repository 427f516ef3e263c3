//! Slot-by-slot comparison of the derived `A_2` quantum table with the
//! published one under four normalizations.

use crepant::geometry::{BaseRing, Geometry};
use crepant::verify::reconcile_a2;

pub fn run_example() -> crepant::Result<()> {
    let g = Geometry::standard(2, BaseRing::projective_space(1));
    let r = reconcile_a2(&g)?;
    for t in &r.results {
        println!("{:<24} {}/{}", t.transformation.name(), t.matched, t.slots.len());
    }
    let best = r.best();
    for s in best.slots.iter().filter(|s| !s.matches) {
        println!(
            "E{}*E{} {:?}: residual M = {}, L = {}",
            s.product.0, s.product.1, s.slot, s.residual.m, s.residual.l
        );
    }
    println!("fully matching: {:?}", r.matching());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

//! Classical cup products of exceptional divisors on the resolution.

use crepant::geometry::{BaseRing, Geometry};
use crepant::resolution::{exc_push, printed_twisted_coefficients, ResolutionRing};
use crepant::ring::RingProduct;
use crepant::scalars::Rational;

pub fn run_example() -> crepant::Result<()> {
    let n = 3;
    for i in 1..=n {
        for j in i..=n {
            let c = printed_twisted_coefficients(n, i, j)?;
            let parts: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, t)| !t.is_zero())
                .map(|(l, t)| format!("({} M + {} K) E{}", t.em, t.kap, l + 1))
                .collect();
            println!("E{i} E{j} -> {}", if parts.is_empty() { "0".into() } else { parts.join(" + ") });
        }
    }

    let g = Geometry::standard(2, BaseRing::projective_space(1));
    let ring = ResolutionRing::<Rational>::new(g.clone());
    let e1 = exc_push(&g, 1, g.base().one())?;
    let e2 = exc_push(&g, 2, g.base().one())?;
    println!("over P^1: E1 E2 = {}", ring.mul(&e1, &e2)?.pretty());
    println!("int_Z E1 E1 = {}", ring.res_pairing(&e1, &e1)?);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

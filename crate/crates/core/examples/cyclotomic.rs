//! Exact arithmetic in cyclotomic fields.

use crepant::scalars::{frac, parse_scalar, CycNum};

pub fn run_example() -> crepant::Result<()> {
    let z3 = CycNum::root_of_unity(3, 1)?;
    let i = CycNum::i();

    // 1 + zeta3 + zeta3^2 = 0
    let sum = CycNum::from_int(1) + z3.clone() + z3.pow(2);
    println!("1 + z3 + z3^2 = {sum}");

    // mixed conductors are embedded into Q(zeta_12)
    let w = z3.checked_mul(&i)?;
    println!("zeta3 * i = {w}  (conductor {})", w.conductor());

    let a = CycNum::from_int(2) + z3.clone();
    println!("1 / (2 + zeta3) = {}", a.inv()?);
    println!("|2 + zeta3|^2 = {}", a.clone() * a.conj());

    let half_i = parse_scalar("i/2")?;
    assert_eq!(half_i, i.scale(&frac(1, 2)));
    println!("json of i/2: {}", half_i.to_json());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

//! Cartan matrices of type `A_n`, their closed-form inverses and curve classes.

use crepant::cartan::{cartan_inverse, cartan_matrix, curve_class, intersection};
use crepant::scalars::format_rational;

pub fn run_example() -> crepant::Result<()> {
    for n in 1..=4 {
        println!("c_{n} = {:?}", cartan_matrix(n)?);
        let inv = cartan_inverse(n)?;
        for row in &inv {
            let r: Vec<String> = row.iter().map(format_rational).collect();
            println!("    [{}]", r.join(", "));
        }
    }
    let beta = curve_class(3, 1, 2)?;
    for l in 1..=3 {
        println!("E{l} . ({beta}) = {}", intersection(l, &beta)?);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

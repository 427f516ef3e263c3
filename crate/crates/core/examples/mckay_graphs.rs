//! McKay graphs of the finite subgroups of `SL(2, C)`.

use crepant::mckay::{mckay_report, AdeLabel};

pub fn run_example() -> crepant::Result<()> {
    for name in ["A1", "A4", "D4", "D6", "E6", "E7", "E8"] {
        let label: AdeLabel = name.parse()?;
        let full = mckay_report(label, false)?;
        let res = mckay_report(label, true)?;
        let dims: Vec<u64> = full.graph.vertices.iter().map(|v| v.dim).collect();
        println!(
            "{name:<3} |G| = {:<3} {:<22} dims {:?}  McKay {}  resolution {}",
            label.group_order(),
            full.equation,
            dims,
            full.verdict.map_or("?".into(), |t| t.to_string()),
            res.verdict.map_or("?".into(), |t| t.to_string()),
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

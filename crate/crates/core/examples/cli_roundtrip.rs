//! Driving the command line in-process and reading its JSON back.

use crepant::cli::run;
use crepant::ring::ResClass;
use crepant::scalars::CycNum;

pub fn run_example() -> crepant::Result<()> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(["crepant", "qc-table", "--q", "zeta3,zeta3"], &mut out, &mut err);
    println!("qc-table exit code {code}");
    let doc: serde_json::Value = serde_json::from_slice(&out).map_err(|e| crepant::Error::Parse(e.to_string()))?;
    let e1e1 = ResClass::<CycNum>::from_json(&doc["products"]["E1*E1"])?;
    println!("E1*E1 = {}", e1e1.pretty());

    let code = run(["crepant", "qc-table", "--q", "-1,-1"], &mut Vec::new(), &mut err);
    println!("at a pole: exit code {code}, {}", String::from_utf8_lossy(&err).trim());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

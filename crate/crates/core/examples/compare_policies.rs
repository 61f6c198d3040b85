// Runs every policy over one workload and prints the comparison table.
//
//     cargo run --example compare_policies [case]

use std::error::Error;

use gbtq::policies::{PolicyKind, PolicyParams};
use gbtq::{builtin_case, compare};

fn run_example(case: u32) -> Result<String, Box<dyn Error>> {
    let (workload, alpha) = builtin_case(case)?;
    let params = PolicyParams { alpha, ..Default::default() };
    let comparison = compare(&workload, &PolicyKind::ALL, params)?;
    Ok(format!("Case {case}\n{}", comparison.to_table()))
}

fn main() {
    let case = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    match run_example(case) {
        Ok(text) => print!("{text}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

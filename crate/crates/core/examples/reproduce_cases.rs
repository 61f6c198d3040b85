// Replays the six reference workloads under RR(20) and GBTQ and prints each
// comparison table, followed by the per-case ATAT/AWT/CS series as CSV.
//
//     cargo run --example reproduce_cases

use std::error::Error;

use gbtq::policies::{PolicyKind, PolicyParams};
use gbtq::report::series_csv;
use gbtq::{builtin_case, compare};

fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    let mut series = Vec::new();
    for case in 1..=6 {
        let (workload, alpha) = builtin_case(case)?;
        let params = PolicyParams { alpha, ..Default::default() };
        let comparison = compare(&workload, &[PolicyKind::Rr, PolicyKind::Gbtq], params)?;
        out.push_str(&format!("Case {case}\n{}\n", comparison.to_table()));
        series.push((case.to_string(), comparison));
    }
    out.push_str(&series_csv(series.iter().map(|(c, cmp)| (c.as_str(), cmp)))?);
    Ok(out)
}

fn main() {
    match run_example() {
        Ok(text) => print!("{text}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

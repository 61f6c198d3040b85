// Parses a workload from CSV text, runs GBTQ, and emits the metrics as JSON.
//
//     cargo run --example workload_csv

use std::error::Error;

use gbtq::policies::{PolicyKind, PolicyParams};
use gbtq::{parse_workload, simulate};

const WORKLOAD: &str = "pid,arrival,burst
1,0,12
2,3,40
3,3,7
4,9,65
5,20,18
";

fn run_example() -> Result<String, Box<dyn Error>> {
    let workload = parse_workload("inline", WORKLOAD)?;
    let run = simulate(&workload, PolicyKind::Gbtq, PolicyParams::default())?;
    Ok(serde_json::to_string_pretty(&run.metrics)? + "\n")
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

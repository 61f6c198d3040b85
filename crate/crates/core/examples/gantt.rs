// Prints ASCII Gantt charts for RR and GBTQ side by side.
//
//     cargo run --example gantt

use std::error::Error;

use gbtq::policies::{PolicyKind, PolicyParams};
use gbtq::{builtin_case, render_gantt, simulate};

fn run_example() -> Result<String, Box<dyn Error>> {
    let (workload, alpha) = builtin_case(2)?;
    let params = PolicyParams { alpha, ..Default::default() };
    let mut out = String::new();
    for kind in [PolicyKind::Rr, PolicyKind::Gbtq] {
        let run = simulate(&workload, kind, params)?;
        out.push_str(&format!("{} (tq {})\n", run.algorithm, run.tq));
        out.push_str(&render_gantt(&run.schedule, 60));
        out.push('\n');
    }
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

// Compares GBTQ with one grouping over the whole workload against regrouping
// the remaining bursts at the start of every round.
//
//     cargo run --example regroup_modes

use std::error::Error;

use gbtq::policies::Gbtq;
use gbtq::{builtin_case, fmt_decimal, metrics, run, RegroupMode};

fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    for case in 1..=6 {
        let (workload, alpha) = builtin_case(case)?;
        for mode in [RegroupMode::Static, RegroupMode::Dynamic] {
            let mut policy = Gbtq::new(&workload, alpha, mode)?;
            let m = metrics(&run(&workload, &mut policy)?)?;
            out.push_str(&format!(
                "case {case} {:<8} rounds {:>2}  ATAT {:>7}  AWT {:>7}  CS {:>2}\n",
                format!("{mode:?}"),
                policy.rounds(),
                fmt_decimal(m.atat),
                fmt_decimal(m.awt),
                m.cs
            ));
        }
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

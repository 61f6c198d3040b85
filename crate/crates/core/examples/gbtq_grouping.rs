// Shows how GBTQ splits a workload into four quartile groups and picks a
// quantum for each.
//
//     cargo run --example gbtq_grouping

use std::error::Error;

use gbtq::policies::group_processes;
use gbtq::{builtin_case, fmt_decimal};

fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    for case in [1, 5, 6] {
        let (workload, alpha) = builtin_case(case)?;
        let pairs: Vec<_> = workload.processes().iter().map(|p| (p.pid, p.burst)).collect();
        let a = group_processes(&pairs, alpha)?;
        let q = a.quartiles;
        out.push_str(&format!(
            "Case {case}: Q1 {} Q2 {} Q3 {} alpha {alpha}\n",
            fmt_decimal(q.q1),
            fmt_decimal(q.q2),
            fmt_decimal(q.q3)
        ));
        for (i, (group, quantum)) in a.groups.iter().zip(a.quanta).enumerate() {
            let bursts: Vec<String> = group
                .iter()
                .map(|pid| workload.get(*pid).map(|p| p.burst.to_string()).unwrap_or_default())
                .collect();
            out.push_str(&format!("  RQ{} quantum {quantum:>3}  bursts [{}]\n", i + 1, bursts.join(", ")));
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

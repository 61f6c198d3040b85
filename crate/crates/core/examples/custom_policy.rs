// Plugs a user-defined policy into the engine: longest job first,
// non-preemptive.
//
//     cargo run --example custom_policy

use std::error::Error;

use gbtq::{builtin_case, metrics, run, Dispatch, Policy, SchedulerView};

struct LongestFirst;

impl Policy for LongestFirst {
    fn name(&self) -> &str {
        "LJF"
    }

    fn select(&mut self, view: &SchedulerView<'_>) -> Dispatch {
        let p = view
            .ready
            .iter()
            .max_by_key(|p| (p.spec.burst, std::cmp::Reverse(p.pid())))
            .expect("ready set is non-empty");
        Dispatch::to_completion(p.pid())
    }
}

fn run_example() -> Result<String, Box<dyn Error>> {
    let (workload, _) = builtin_case(2)?;
    let schedule = run(&workload, &mut LongestFirst)?;
    let m = metrics(&schedule)?;
    Ok(format!(
        "{schedule}\nATAT {} AWT {} CS {}\n",
        gbtq::fmt_decimal(m.atat),
        gbtq::fmt_decimal(m.awt),
        m.cs
    ))
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

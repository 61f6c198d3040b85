//! Deterministic CPU-scheduling simulation.
//!
//! A [`Workload`] of processes is run through the discrete-time [`engine`]
//! under one of the [`policies`]; the resulting [`Schedule`] feeds the
//! [`report`] module for turnaround, waiting and context-switch metrics,
//! comparison tables and Gantt charts.
//!
//! ```
//! use gbtq::{builtin_case, simulate, PolicyKind, PolicyParams};
//!
//! let (workload, alpha) = builtin_case(2).unwrap();
//! let params = PolicyParams { alpha, ..Default::default() };
//! let run = simulate(&workload, PolicyKind::Gbtq, params).unwrap();
//! assert_eq!(run.tq, "20, 46, 82, 95");
//! assert_eq!(run.metrics.cs, 3);
//! ```

pub mod cli;
pub mod engine;
pub mod policies;
pub mod report;
pub mod stats;
pub mod workload;

pub use engine::{context_switches, run, Dispatch, Policy, Quantum, Schedule, SchedulerView, Slice};
pub use policies::{PolicyKind, PolicyParams, RegroupMode};
pub use report::{compare, fmt_decimal, metrics, render_gantt, simulate, Comparison, MetricsReport};
pub use workload::{builtin_case, parse_workload, Pid, ProcessSpec, Time, Workload};

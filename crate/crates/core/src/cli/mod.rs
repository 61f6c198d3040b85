//! Command-line front end: `simulate`, `compare` and `cases`.
//!
//! Output is assembled in full before anything is printed, so an error never
//! leaves a partial table on stdout.

pub mod reference;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::policies::{PolicyError, PolicyKind, PolicyParams, RegroupMode};
use crate::report::{self, fmt_decimal, render_gantt, Comparison, ReportError, RunResult};
use crate::workload::{builtin_case, parse_workload, Time, Workload, WorkloadError, REFERENCE_ALPHA};
use reference::{reference_rows, Expected, Note};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Workload(#[from] WorkloadError),
    #[error(transparent)]
    Policy(#[from] PolicyError),
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(name = "gbtq", version, about = "Deterministic CPU-scheduling simulator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one policy over a workload and print its metrics.
    Simulate(SimulateArgs),
    /// Run several policies over the same workload.
    Compare(CompareArgs),
    /// Replay the six reference cases under RR and GBTQ and audit the results.
    Cases,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
#[group(id = "source", required = true, multiple = false)]
pub struct SourceArgs {
    /// Built-in reference case (1..=6).
    #[arg(long = "case", group = "source")]
    pub case: Option<u32>,
    /// Workload CSV with header `pid,arrival,burst`.
    #[arg(long = "workload", group = "source")]
    pub workload: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Threshold for GBTQ and MMRR.
    #[arg(long, default_value_t = REFERENCE_ALPHA)]
    pub alpha: Time,
    /// Fixed quantum for RR.
    #[arg(long, default_value_t = 20)]
    pub tq: Time,
    /// When GBTQ computes its groups.
    #[arg(long, default_value = "static")]
    pub regroup: RegroupMode,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Append an ASCII Gantt chart (table format only).
    #[arg(long)]
    pub gantt: bool,
    #[arg(long, default_value_t = 80)]
    pub gantt_width: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long)]
    pub algo: PolicyKind,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Comma-separated policy names, e.g. `rr,gbtq`.
    #[arg(long)]
    pub algos: String,
    #[command(flatten)]
    pub common: CommonArgs,
}

/// Where a workload comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WorkloadSource {
    Case(u32),
    File(PathBuf),
}

/// Fully resolved settings for one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub source: WorkloadSource,
    pub policies: Vec<PolicyKind>,
    pub params: PolicyParams,
    pub format: Format,
    pub gantt: Option<usize>,
}

impl RunConfig {
    fn new(source: &SourceArgs, policies: Vec<PolicyKind>, common: &CommonArgs) -> Result<Self, CliError> {
        let source = match (source.case, &source.workload) {
            (Some(n), None) => WorkloadSource::Case(n),
            (None, Some(path)) => WorkloadSource::File(path.clone()),
            _ => return Err(CliError::Usage("give exactly one of --case or --workload".into())),
        };
        if common.alpha == 0 {
            return Err(CliError::Usage("--alpha must be at least 1".into()));
        }
        if common.tq == 0 {
            return Err(CliError::Usage("--tq must be at least 1".into()));
        }
        if policies.is_empty() {
            return Err(CliError::Usage("no algorithms given".into()));
        }
        Ok(Self {
            source,
            policies,
            params: PolicyParams {
                alpha: common.alpha,
                tq: common.tq,
                regroup: common.regroup,
            },
            format: common.format,
            gantt: common.gantt.then_some(common.gantt_width),
        })
    }

    /// Loads the workload and the label used in CSV `case` columns.
    pub fn load(&self) -> Result<(Workload, String), CliError> {
        match &self.source {
            WorkloadSource::Case(n) => {
                let (w, _) = builtin_case(*n)?;
                Ok((w, n.to_string()))
            }
            WorkloadSource::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                let name = file_label(path);
                Ok((parse_workload(name.clone(), &text)?, name))
            }
        }
    }
}

fn file_label(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "workload".to_string())
}

fn parse_algos(list: &str) -> Result<Vec<PolicyKind>, CliError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(CliError::from))
        .collect()
}

/// Rendered output plus the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

pub fn execute(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Simulate(args) => {
            let config = RunConfig::new(&args.source, vec![args.algo], &args.common)?;
            cmd_simulate(&config).map(Output::ok)
        }
        Command::Compare(args) => {
            let config = RunConfig::new(&args.source, parse_algos(&args.algos)?, &args.common)?;
            cmd_compare(&config).map(Output::ok)
        }
        Command::Cases => cmd_cases(),
    }
}

#[derive(Serialize)]
struct SimulateJson<'a> {
    workload: &'a str,
    #[serde(flatten)]
    run: &'a RunResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    gantt: Option<String>,
}

pub fn cmd_simulate(config: &RunConfig) -> Result<String, CliError> {
    let (workload, _) = config.load()?;
    let kind = config.policies[0];
    let run = report::simulate(&workload, kind, config.params)?;
    let gantt = config.gantt.map(|w| render_gantt(&run.schedule, w));
    match config.format {
        Format::Json => {
            let body = SimulateJson {
                workload: workload.name(),
                run: &run,
                gantt,
            };
            let mut out = serde_json::to_string_pretty(&body).map_err(ReportError::from)?;
            out.push('\n');
            Ok(out)
        }
        Format::Csv => process_csv(&run),
        Format::Table => {
            let mut out = process_table(workload.name(), &run);
            if let Some(chart) = gantt {
                out.push('\n');
                out.push_str(&chart);
            }
            Ok(out)
        }
    }
}

fn process_table(name: &str, run: &RunResult) -> String {
    let m = &run.metrics;
    let mut out = String::new();
    let _ = writeln!(out, "workload {name}  algorithm {}  tq {}", run.algorithm, run.tq);
    let _ = writeln!(
        out,
        "{:<8}{:>8}{:>7}{:>7}{:>8}{:>7}{:>7}{:>10}",
        "Process", "Arrival", "Burst", "Start", "Finish", "TAT", "WT", "Response"
    );
    for r in &m.rows {
        let _ = writeln!(
            out,
            "{:<8}{:>8}{:>7}{:>7}{:>8}{:>7}{:>7}{:>10}",
            r.pid.to_string(),
            r.arrival,
            r.burst,
            r.first_start,
            r.finish,
            r.tat,
            r.wt,
            r.response
        );
    }
    let _ = writeln!(
        out,
        "ATAT {}  AWT {}  ART {}  CS {}  makespan {}  utilization {}",
        fmt_decimal(m.atat),
        fmt_decimal(m.awt),
        fmt_decimal(m.art),
        m.cs,
        m.makespan,
        fmt_decimal(m.utilization)
    );
    out
}

fn process_csv(run: &RunResult) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Report(ReportError::Csv(e));
    writer
        .write_record(["pid", "arrival", "burst", "first_start", "finish", "tat", "wt", "response"])
        .map_err(csv_err)?;
    for r in &run.metrics.rows {
        writer
            .write_record(
                [r.pid.0 as u64, r.arrival, r.burst, r.first_start, r.finish, r.tat, r.wt, r.response]
                    .map(|v| v.to_string()),
            )
            .map_err(csv_err)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| csv_err(csv::Error::from(e.into_error())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn cmd_compare(config: &RunConfig) -> Result<String, CliError> {
    let (workload, label) = config.load()?;
    let comparison = report::compare(&workload, &config.policies, config.params)?;
    Ok(match config.format {
        Format::Table => {
            let mut out = comparison.to_table();
            if let Some(width) = config.gantt {
                for row in &comparison.rows {
                    let _ = write!(out, "\n{}\n{}", row.algorithm, render_gantt(&row.schedule, width));
                }
            }
            out
        }
        Format::Csv => comparison.to_csv(&label)?,
        Format::Json => {
            let mut out = comparison.to_json()?;
            out.push('\n');
            out
        }
    })
}

/// Outcome of checking one simulated value against its published counterpart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
    Discrepancy,
    Unverified,
}

impl Verdict {
    pub fn judge(simulated: &str, expected: &Expected) -> Self {
        if simulated == expected.value {
            return Verdict::Match;
        }
        match expected.note {
            Note::Exact => Verdict::Mismatch,
            Note::Discrepancy(_) => Verdict::Discrepancy,
            Note::Unverified(_) => Verdict::Unverified,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
            Verdict::Discrepancy => "DISCREPANCY",
            Verdict::Unverified => "UNVERIFIED",
        }
    }
}

/// Simulates the six reference cases and audits every published cell.
/// Exits non-zero only on an unannotated mismatch.
pub fn cmd_cases() -> Result<Output, CliError> {
    let kinds = [PolicyKind::Rr, PolicyKind::Gbtq];
    let comparisons = (1..=6)
        .map(|n| {
            let (w, alpha) = builtin_case(n)?;
            let params = PolicyParams {
                alpha,
                tq: 20,
                regroup: RegroupMode::Static,
            };
            Ok((n, w.len(), report::compare(&w, &kinds, params)?))
        })
        .collect::<Result<Vec<(u32, usize, Comparison)>, CliError>>()?;

    let mut out = String::new();
    let mut tally = [0usize; 4];
    for (n, size, comparison) in &comparisons {
        let _ = writeln!(out, "Case {n} ({size} processes, alpha {REFERENCE_ALPHA})");
        out.push_str(&comparison.to_table());
        let _ = writeln!(out, "{:<10}{:<6}{:<18}{:<18}Status", "Algorithm", "Field", "Published", "Simulated");
        for expected in reference_rows(*n) {
            let run = comparison
                .row(expected.policy)
                .expect("reference policies are always simulated");
            let fields = [
                ("TQ", run.tq.clone(), &expected.tq),
                ("ATAT", fmt_decimal(run.metrics.atat), &expected.atat),
                ("AWT", fmt_decimal(run.metrics.awt), &expected.awt),
                ("CS", run.metrics.cs.to_string(), &expected.cs),
            ];
            for (field, simulated, exp) in fields {
                let verdict = Verdict::judge(&simulated, exp);
                tally[verdict as usize] += 1;
                let _ = write!(
                    out,
                    "{:<10}{:<6}{:<18}{:<18}{}",
                    run.algorithm,
                    field,
                    exp.value,
                    simulated,
                    verdict.label()
                );
                match (verdict, exp.note) {
                    (Verdict::Discrepancy, Note::Discrepancy(why))
                    | (Verdict::Unverified, Note::Unverified(why)) => {
                        let _ = write!(out, " ({why})");
                    }
                    _ => {}
                }
                out.push('\n');
            }
        }
        out.push('\n');
    }
    let [matched, mismatched, discrepancies, unverified] = tally;
    let _ = writeln!(
        out,
        "{matched} match, {discrepancies} documented discrepancy, {unverified} unverified, {mismatched} mismatch"
    );
    Ok(Output {
        stdout: out,
        code: if mismatched == 0 { 0 } else { 1 },
    })
}

/// Entry point for the binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(output) => {
            print!("{}", output.stdout);
            ExitCode::from(output.code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Result<Output, CliError> {
        let cli = Cli::try_parse_from(std::iter::once("gbtq").chain(args.iter().copied()))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        execute(cli)
    }

    #[test]
    fn simulate_case_three() {
        let out = exec(&["simulate", "--case", "3", "--algo", "gbtq"]).unwrap();
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("tq 81, 82, 83, 84"));
        assert!(out.stdout.contains("ATAT 205  AWT 122.5"));
        assert!(out.stdout.contains("CS 3"));
    }

    #[test]
    fn simulate_unknown_case_fails() {
        assert!(matches!(
            exec(&["simulate", "--case", "7", "--algo", "rr"]),
            Err(CliError::Workload(WorkloadError::UnknownCase(7)))
        ));
    }

    #[test]
    fn source_is_required_and_exclusive() {
        assert!(exec(&["simulate", "--algo", "rr"]).is_err());
        assert!(exec(&["simulate", "--case", "1", "--workload", "x.csv", "--algo", "rr"]).is_err());
    }

    #[test]
    fn empty_algo_list_is_a_usage_error() {
        assert!(matches!(
            exec(&["compare", "--case", "1", "--algos", " , "]),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            exec(&["compare", "--case", "1", "--algos", "rr,vtrr"]),
            Err(CliError::Policy(PolicyError::UnknownPolicy(_)))
        ));
    }

    #[test]
    fn zero_alpha_rejected() {
        assert!(matches!(
            exec(&["simulate", "--case", "1", "--algo", "gbtq", "--alpha", "0"]),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn compare_csv_case_one() {
        let out = exec(&["compare", "--case", "1", "--algos", "rr,gbtq", "--format", "csv"]).unwrap();
        let lines: Vec<_> = out.stdout.lines().collect();
        assert_eq!(lines[0], "case,algorithm,tq,atat,awt,cs");
        assert!(lines[1].ends_with(",58"));
        assert!(lines[2].ends_with(",44"));
    }

    #[test]
    fn simulate_csv_and_json() {
        let csv = exec(&["simulate", "--case", "2", "--algo", "fcfs", "--format", "csv"]).unwrap();
        assert_eq!(csv.stdout.lines().nth(4), Some("4,0,95,139,234,234,139,139"));
        let json = exec(&["simulate", "--case", "2", "--algo", "rr", "--format", "json", "--gantt"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
        assert_eq!(v["metrics"]["cs"], 13);
        assert_eq!(v["workload"], "case2");
        assert!(v["gantt"].as_str().unwrap().starts_with("|P1|P2|"));
    }

    #[test]
    fn cases_report_is_clean() {
        let out = cmd_cases().unwrap();
        assert_eq!(out.code, 0, "{}", out.stdout);
        assert!(out.stdout.contains("0 mismatch"));
        assert!(out.stdout.contains("1 documented discrepancy"));
        assert_eq!(out.stdout, cmd_cases().unwrap().stdout);
    }
}

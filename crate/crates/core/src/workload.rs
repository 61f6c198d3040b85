//! Process records, workload CSV parsing, and the six built-in reference cases.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Simulated time, in whole time units.
pub type Time = u64;

/// Process identity. Positive and unique within a workload.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Pid(pub u32);

impl fmt::Display for Pid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.0)
    }
}

/// A submitted process. Immutable once constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProcessSpec {
    pub pid: Pid,
    pub arrival: Time,
    pub burst: Time,
}

impl ProcessSpec {
    pub fn new(pid: u32, arrival: Time, burst: Time) -> Result<Self, WorkloadError> {
        if pid == 0 {
            return Err(WorkloadError::InvalidPid { pid });
        }
        if burst == 0 {
            return Err(WorkloadError::ZeroBurst { pid });
        }
        Ok(Self {
            pid: Pid(pid),
            arrival,
            burst,
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WorkloadError {
    #[error("workload is empty")]
    Empty,
    #[error("pid must be positive, got {pid}")]
    InvalidPid { pid: u32 },
    #[error("process P{pid}: burst must be at least 1")]
    ZeroBurst { pid: u32 },
    #[error("duplicate pid P{pid}")]
    DuplicatePid { pid: u32 },
    #[error("missing or malformed header, expected `pid,arrival,burst`")]
    BadHeader,
    #[error("row {row}: {message}")]
    Row { row: usize, message: String },
    #[error("no built-in case {0}; valid cases are 1..=6")]
    UnknownCase(u32),
}

/// An ordered, non-empty set of processes with distinct pids.
///
/// The sequence order is submission order; no policy ordering is applied here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Workload {
    name: String,
    processes: Vec<ProcessSpec>,
}

impl Workload {
    pub fn new(
        name: impl Into<String>,
        processes: Vec<ProcessSpec>,
    ) -> Result<Self, WorkloadError> {
        if processes.is_empty() {
            return Err(WorkloadError::Empty);
        }
        let mut seen = HashSet::with_capacity(processes.len());
        for p in &processes {
            if p.pid.0 == 0 {
                return Err(WorkloadError::InvalidPid { pid: 0 });
            }
            if p.burst == 0 {
                return Err(WorkloadError::ZeroBurst { pid: p.pid.0 });
            }
            if !seen.insert(p.pid) {
                return Err(WorkloadError::DuplicatePid { pid: p.pid.0 });
            }
        }
        Ok(Self {
            name: name.into(),
            processes,
        })
    }

    /// Builds a workload from `(arrival, burst)` pairs, numbering pids from 1.
    pub fn from_pairs(
        name: impl Into<String>,
        pairs: impl IntoIterator<Item = (Time, Time)>,
    ) -> Result<Self, WorkloadError> {
        let processes = pairs
            .into_iter()
            .enumerate()
            .map(|(i, (arrival, burst))| ProcessSpec::new(i as u32 + 1, arrival, burst))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(name, processes)
    }

    /// Builds a workload where every process arrives at 0.
    pub fn from_bursts(
        name: impl Into<String>,
        bursts: impl IntoIterator<Item = Time>,
    ) -> Result<Self, WorkloadError> {
        Self::from_pairs(name, bursts.into_iter().map(|b| (0, b)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn processes(&self) -> &[ProcessSpec] {
        &self.processes
    }

    pub fn len(&self) -> usize {
        self.processes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.processes.is_empty()
    }

    pub fn get(&self, pid: Pid) -> Option<&ProcessSpec> {
        self.processes.iter().find(|p| p.pid == pid)
    }

    pub fn total_burst(&self) -> Time {
        self.processes.iter().map(|p| p.burst).sum()
    }

    pub fn max_arrival(&self) -> Time {
        self.processes.iter().map(|p| p.arrival).max().unwrap_or(0)
    }

    /// Serializes to the `pid,arrival,burst` CSV format accepted by [`parse_workload`].
    pub fn to_csv(&self) -> String {
        let mut out = String::from("pid,arrival,burst\n");
        for p in &self.processes {
            out.push_str(&format!("{},{},{}\n", p.pid.0, p.arrival, p.burst));
        }
        out
    }
}

#[derive(Debug, Deserialize)]
struct Row {
    pid: String,
    arrival: String,
    burst: String,
}

fn field<T: std::str::FromStr>(raw: &str, name: &str, row: usize) -> Result<T, WorkloadError> {
    raw.trim().parse().map_err(|_| WorkloadError::Row {
        row,
        message: format!("{name} `{raw}` is not a valid integer"),
    })
}

/// Parses a workload from CSV text with header `pid,arrival,burst`.
///
/// Row numbers in errors count data rows from 1 (the header is row 0).
pub fn parse_workload(name: impl Into<String>, text: &str) -> Result<Workload, WorkloadError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|_| WorkloadError::BadHeader)?;
    if headers.iter().collect::<Vec<_>>() != ["pid", "arrival", "burst"] {
        return Err(WorkloadError::BadHeader);
    }

    let mut processes = Vec::new();
    let mut seen = HashSet::new();
    for (i, record) in reader.deserialize::<Row>().enumerate() {
        let row = i + 1;
        let record = record.map_err(|e| WorkloadError::Row {
            row,
            message: e.to_string(),
        })?;
        let pid: i64 = field(&record.pid, "pid", row)?;
        let arrival: i64 = field(&record.arrival, "arrival", row)?;
        let burst: i64 = field(&record.burst, "burst", row)?;
        if pid < 1 || pid > u32::MAX as i64 {
            return Err(WorkloadError::Row {
                row,
                message: format!("pid must be a positive integer, got {pid}"),
            });
        }
        if arrival < 0 {
            return Err(WorkloadError::Row {
                row,
                message: format!("arrival must be >= 0, got {arrival}"),
            });
        }
        if burst < 1 {
            return Err(WorkloadError::Row {
                row,
                message: format!("burst must be >= 1, got {burst}"),
            });
        }
        if !seen.insert(pid) {
            return Err(WorkloadError::Row {
                row,
                message: format!("duplicate pid {pid}"),
            });
        }
        processes.push(ProcessSpec {
            pid: Pid(pid as u32),
            arrival: arrival as Time,
            burst: burst as Time,
        });
    }
    Workload::new(name, processes)
}

/// Threshold used by every reference case.
pub const REFERENCE_ALPHA: Time = 20;

/// Returns one of the six reference workloads together with its threshold.
pub fn builtin_case(n: u32) -> Result<(Workload, Time), WorkloadError> {
    let name = format!("case{n}");
    let workload = match n {
        1 => Workload::from_bursts(name, [7, 15, 24, 84, 123, 145, 150, 175, 180, 200]),
        2 => Workload::from_bursts(name, [11, 46, 82, 95]),
        3 => Workload::from_bursts(name, [81, 82, 83, 84]),
        4 => Workload::from_bursts(name, 61..=68),
        5 => Workload::from_pairs(name, [(0, 7), (5, 14), (15, 55), (50, 75), (75, 23)]),
        6 => Workload::from_pairs(
            name,
            [
                (0, 24),
                (17, 48),
                (35, 65),
                (50, 74),
                (70, 89),
                (80, 100),
                (130, 150),
            ],
        ),
        other => return Err(WorkloadError::UnknownCase(other)),
    }?;
    Ok((workload, REFERENCE_ALPHA))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_csv() {
        let w = parse_workload("t", "pid,arrival,burst\n1,0,7\n2,0,15").unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w.processes()[1], ProcessSpec::new(2, 0, 15).unwrap());
    }

    #[test]
    fn parses_case_two_rows() {
        let w = parse_workload("t", "pid,arrival,burst\n1,0,11\n2,0,46\n3,0,82\n4,0,95\n").unwrap();
        let bursts: Vec<_> = w.processes().iter().map(|p| p.burst).collect();
        assert_eq!(bursts, [11, 46, 82, 95]);
        assert!(w.processes().iter().all(|p| p.arrival == 0));
    }

    #[test]
    fn keeps_submission_order() {
        let w = parse_workload("t", "pid,arrival,burst\n3,0,5\n1,0,9\n2,4,1\n").unwrap();
        let pids: Vec<_> = w.processes().iter().map(|p| p.pid.0).collect();
        assert_eq!(pids, [3, 1, 2]);
    }

    #[test]
    fn rejects_zero_burst_with_row() {
        let err = parse_workload("t", "pid,arrival,burst\n1,0,0").unwrap_err();
        assert!(matches!(err, WorkloadError::Row { row: 1, ref message } if message.contains("burst")));
    }

    #[test]
    fn rejects_negative_arrival() {
        let err = parse_workload("t", "pid,arrival,burst\n1,0,3\n2,-1,4").unwrap_err();
        assert!(matches!(err, WorkloadError::Row { row: 2, .. }));
    }

    #[test]
    fn rejects_duplicate_pid() {
        let err = parse_workload("t", "pid,arrival,burst\n1,0,3\n1,2,4").unwrap_err();
        assert!(matches!(err, WorkloadError::Row { row: 2, ref message } if message.contains("duplicate")));
    }

    #[test]
    fn rejects_non_integer() {
        let err = parse_workload("t", "pid,arrival,burst\n1,0.5,3").unwrap_err();
        assert!(matches!(err, WorkloadError::Row { row: 1, ref message } if message.contains("arrival")));
    }

    #[test]
    fn rejects_empty_body_and_bad_header() {
        assert_eq!(parse_workload("t", "pid,arrival,burst\n"), Err(WorkloadError::Empty));
        assert_eq!(parse_workload("t", "id,at,bt\n1,0,1"), Err(WorkloadError::BadHeader));
        assert_eq!(parse_workload("t", ""), Err(WorkloadError::BadHeader));
    }

    #[test]
    fn builtin_cases_match_reference_tables() {
        let (w, alpha) = builtin_case(1).unwrap();
        assert_eq!(alpha, 20);
        let bursts: Vec<_> = w.processes().iter().map(|p| p.burst).collect();
        assert_eq!(bursts, [7, 15, 24, 84, 123, 145, 150, 175, 180, 200]);
        assert!(w.processes().iter().all(|p| p.arrival == 0));

        let (w, _) = builtin_case(5).unwrap();
        let pairs: Vec<_> = w.processes().iter().map(|p| (p.arrival, p.burst)).collect();
        assert_eq!(pairs, [(0, 7), (5, 14), (15, 55), (50, 75), (75, 23)]);

        let (w, _) = builtin_case(3).unwrap();
        let bursts: Vec<_> = w.processes().iter().map(|p| p.burst).collect();
        assert_eq!(bursts, [81, 82, 83, 84]);

        let (w, _) = builtin_case(4).unwrap();
        assert_eq!(w.total_burst(), 516);
        let (w, _) = builtin_case(6).unwrap();
        assert_eq!(w.len(), 7);
        assert_eq!(w.max_arrival(), 130);

        assert_eq!(builtin_case(0), Err(WorkloadError::UnknownCase(0)));
        assert_eq!(builtin_case(7), Err(WorkloadError::UnknownCase(7)));
    }
}

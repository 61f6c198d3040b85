use serde::Serialize;

use super::ReportError;
use crate::engine::{context_switches, Schedule};
use crate::stats::Rational;
use crate::workload::{Pid, Time};

/// Per-process outcome.
///
/// `wt` is turnaround minus burst, the quantity the reference tables report.
/// The first-dispatch delay is kept separately as `response`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProcessMetrics {
    pub pid: Pid,
    pub arrival: Time,
    pub burst: Time,
    pub first_start: Time,
    pub finish: Time,
    pub tat: Time,
    pub wt: Time,
    pub response: Time,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricsReport {
    pub rows: Vec<ProcessMetrics>,
    #[serde(serialize_with = "super::ser_ratio")]
    pub atat: Rational,
    #[serde(serialize_with = "super::ser_ratio")]
    pub awt: Rational,
    #[serde(serialize_with = "super::ser_ratio")]
    pub art: Rational,
    pub cs: usize,
    pub makespan: Time,
    #[serde(serialize_with = "super::ser_ratio")]
    pub utilization: Rational,
}

impl MetricsReport {
    pub fn total_tat(&self) -> Time {
        self.rows.iter().map(|r| r.tat).sum()
    }

    pub fn total_wt(&self) -> Time {
        self.rows.iter().map(|r| r.wt).sum()
    }

    pub fn total_burst(&self) -> Time {
        self.rows.iter().map(|r| r.burst).sum()
    }
}

fn mean(total: Time, n: usize) -> Rational {
    Rational::new(total as i64, n as i64)
}

/// Computes every metric for a finished schedule.
pub fn metrics(schedule: &Schedule) -> Result<MetricsReport, ReportError> {
    let workload = schedule.workload();
    let rows = workload
        .processes()
        .iter()
        .map(|p| {
            let finish = schedule.finish(p.pid).ok_or(ReportError::Incomplete(p.pid))?;
            let first_start = schedule
                .first_start(p.pid)
                .ok_or(ReportError::Incomplete(p.pid))?;
            let tat = finish - p.arrival;
            Ok(ProcessMetrics {
                pid: p.pid,
                arrival: p.arrival,
                burst: p.burst,
                first_start,
                finish,
                tat,
                wt: tat - p.burst,
                response: first_start - p.arrival,
            })
        })
        .collect::<Result<Vec<_>, ReportError>>()?;

    let n = rows.len();
    let makespan = schedule.makespan();
    let busy: Time = rows.iter().map(|r| r.burst).sum();
    Ok(MetricsReport {
        atat: mean(rows.iter().map(|r| r.tat).sum(), n),
        awt: mean(rows.iter().map(|r| r.wt).sum(), n),
        art: mean(rows.iter().map(|r| r.response).sum(), n),
        cs: context_switches(schedule),
        makespan,
        utilization: Rational::new(busy as i64, makespan.max(1) as i64),
        rows,
    })
}

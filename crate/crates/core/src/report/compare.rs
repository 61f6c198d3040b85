use rayon::prelude::*;
use serde::Serialize;

use super::{fmt_decimal, metrics, MetricsReport, ReportError};
use crate::engine::{self, Schedule};
use crate::policies::{self, PolicyKind, PolicyParams};
use crate::workload::Workload;

/// One policy's run over a workload.
#[derive(Debug, Clone, Serialize)]
pub struct RunResult {
    pub policy: PolicyKind,
    /// Display name, e.g. `GBTQ`.
    pub algorithm: String,
    /// Quantum setting as shown in the comparison's TQ column.
    pub tq: String,
    pub metrics: MetricsReport,
    #[serde(skip)]
    pub schedule: Schedule,
}

/// Runs one policy over `workload`.
pub fn simulate(
    workload: &Workload,
    kind: PolicyKind,
    params: PolicyParams,
) -> Result<RunResult, ReportError> {
    let mut policy = policies::build(kind, workload, params)?;
    let schedule = engine::run(workload, policy.as_mut())?;
    let metrics = metrics(&schedule)?;
    Ok(RunResult {
        policy: kind,
        algorithm: policy.name().to_string(),
        tq: policy.quantum_label(),
        metrics,
        schedule,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Comparison {
    pub workload: String,
    pub rows: Vec<RunResult>,
}

/// Runs every policy over the same workload. Runs are independent and execute
/// in parallel; rows come back in the order requested.
pub fn compare(
    workload: &Workload,
    kinds: &[PolicyKind],
    params: PolicyParams,
) -> Result<Comparison, ReportError> {
    if kinds.is_empty() {
        return Err(ReportError::NoPolicies);
    }
    let rows = kinds
        .par_iter()
        .map(|&kind| simulate(workload, kind, params))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Comparison {
        workload: workload.name().to_string(),
        rows,
    })
}

impl Comparison {
    pub fn row(&self, kind: PolicyKind) -> Option<&RunResult> {
        self.rows.iter().find(|r| r.policy == kind)
    }

    /// Plain-text table with columns Algorithm, TQ, ATAT, AWT, CS.
    pub fn to_table(&self) -> String {
        let header = ["Algorithm", "TQ", "ATAT", "AWT", "CS"].map(String::from);
        let body: Vec<[String; 5]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.algorithm.clone(),
                    r.tq.clone(),
                    fmt_decimal(r.metrics.atat),
                    fmt_decimal(r.metrics.awt),
                    r.metrics.cs.to_string(),
                ]
            })
            .collect();
        let mut widths = header.clone().map(|h| h.len());
        for row in &body {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: &[String; 5]| {
            let mut s = cells
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ");
            s.truncate(s.trim_end().len());
            s.push('\n');
            s
        };
        let mut out = line(&header);
        for row in &body {
            out.push_str(&line(row));
        }
        out
    }

    /// CSV rows under the header `case,algorithm,tq,atat,awt,cs`.
    pub fn to_csv(&self, case: &str) -> Result<String, ReportError> {
        series_csv([(case, self)])
    }

    pub fn to_json(&self) -> Result<String, ReportError> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Concatenates comparisons from several cases into one CSV series, the data
/// behind per-case ATAT/AWT/CS bar charts.
pub fn series_csv<'a>(
    cases: impl IntoIterator<Item = (&'a str, &'a Comparison)>,
) -> Result<String, ReportError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["case", "algorithm", "tq", "atat", "awt", "cs"])?;
    for (case, comparison) in cases {
        for r in &comparison.rows {
            writer.write_record([
                case,
                r.policy.as_str(),
                r.tq.as_str(),
                fmt_decimal(r.metrics.atat).as_str(),
                fmt_decimal(r.metrics.awt).as_str(),
                r.metrics.cs.to_string().as_str(),
            ])?;
        }
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

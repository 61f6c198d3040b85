//! Metrics, comparison tables, ASCII Gantt charts, and CSV/JSON export.

mod compare;
mod gantt;
mod metrics;

use num_traits::ToPrimitive;
use serde::Serializer;
use thiserror::Error;

use crate::stats::Rational;

pub use compare::{compare, series_csv, simulate, Comparison, RunResult};
pub use gantt::{render_gantt, MIN_GANTT_WIDTH};
pub use metrics::{metrics, MetricsReport, ProcessMetrics};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("schedule is incomplete: {0} has not finished")]
    Incomplete(crate::workload::Pid),
    #[error("no policies to compare")]
    NoPolicies,
    #[error(transparent)]
    Policy(#[from] crate::policies::PolicyError),
    #[error(transparent)]
    Engine(#[from] crate::engine::EngineError),
    #[error("csv export failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("json export failed: {0}")]
    Json(#[from] serde_json::Error),
}

/// Rounds a non-negative rational half-up to two decimals and drops trailing
/// zeros: `6813/10` is `681.3`, `2334/7` is `333.43`, `571` is `571`.
pub fn fmt_decimal(value: Rational) -> String {
    let (num, den) = (*value.numer() as i128, *value.denom() as i128);
    let negative = (num < 0) != (den < 0);
    let (num, den) = (num.abs(), den.abs());
    let hundredths = (num * 200 + den) / (2 * den);
    let (whole, frac) = (hundredths / 100, hundredths % 100);
    let sign = if negative && hundredths != 0 { "-" } else { "" };
    match frac {
        0 => format!("{sign}{whole}"),
        f if f % 10 == 0 => format!("{sign}{whole}.{}", f / 10),
        f => format!("{sign}{whole}.{f:02}"),
    }
}

pub(crate) fn ser_ratio<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(value.to_f64().unwrap_or(f64::NAN))
}

//! Scheduling policies: the classical baselines, three adaptive-quantum round
//! robin variants, and group-based time quantum round robin.

mod adaptive;
mod baseline;
mod gbtq;
mod rounds;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::engine::Policy;
use crate::workload::{Time, Workload};

pub use adaptive::{
    mmrr_quantum, sarr_quantum, smdrr_quantum, Mmrr, Sarr, SharedQuantumPlanner, Smdrr, SARR_FLOOR,
};
pub use baseline::{hrrn_scores, CandidateScore, Fcfs, Hrrn, RoundRobin, Sjf, Srtf};
pub use gbtq::{assign_quanta, group_processes, Gbtq, GbtqPlanner, GroupAssignment, RegroupMode};
pub use rounds::{RoundPlanner, RoundPolicy};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolicyError {
    #[error("unknown policy `{0}`; expected one of fcfs, sjf, srtf, hrrn, rr, mmrr, sarr, smdrr, gbtq")]
    UnknownPolicy(String),
    #[error("cannot group an empty set of processes")]
    EmptyGroup,
    #[error("{name} must be at least 1")]
    ZeroParameter { name: &'static str },
    #[error("unknown regroup mode `{0}`; expected static or dynamic")]
    UnknownRegroup(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PolicyKind {
    Fcfs,
    Sjf,
    Srtf,
    Hrrn,
    Rr,
    Mmrr,
    Sarr,
    Smdrr,
    Gbtq,
}

impl PolicyKind {
    pub const ALL: [PolicyKind; 9] = [
        PolicyKind::Fcfs,
        PolicyKind::Sjf,
        PolicyKind::Srtf,
        PolicyKind::Hrrn,
        PolicyKind::Rr,
        PolicyKind::Mmrr,
        PolicyKind::Sarr,
        PolicyKind::Smdrr,
        PolicyKind::Gbtq,
    ];

    /// Lowercase name as accepted on the command line.
    pub fn as_str(self) -> &'static str {
        match self {
            PolicyKind::Fcfs => "fcfs",
            PolicyKind::Sjf => "sjf",
            PolicyKind::Srtf => "srtf",
            PolicyKind::Hrrn => "hrrn",
            PolicyKind::Rr => "rr",
            PolicyKind::Mmrr => "mmrr",
            PolicyKind::Sarr => "sarr",
            PolicyKind::Smdrr => "smdrr",
            PolicyKind::Gbtq => "gbtq",
        }
    }

    /// Whether the policy only switches at completions.
    pub fn is_non_preemptive(self) -> bool {
        matches!(self, PolicyKind::Fcfs | PolicyKind::Sjf | PolicyKind::Hrrn)
    }
}

impl fmt::Display for PolicyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PolicyKind {
    type Err = PolicyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        PolicyKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or(PolicyError::UnknownPolicy(s))
    }
}

/// Tunables shared by the policy constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolicyParams {
    /// Threshold for GBTQ and MMRR.
    pub alpha: Time,
    /// Fixed quantum for plain round robin.
    pub tq: Time,
    pub regroup: RegroupMode,
}

impl Default for PolicyParams {
    fn default() -> Self {
        Self {
            alpha: 20,
            tq: 20,
            regroup: RegroupMode::Static,
        }
    }
}

/// Constructs a fresh policy instance for one run over `workload`.
pub fn build(
    kind: PolicyKind,
    workload: &Workload,
    params: PolicyParams,
) -> Result<Box<dyn Policy + Send>, PolicyError> {
    if params.alpha == 0 {
        return Err(PolicyError::ZeroParameter { name: "alpha" });
    }
    if params.tq == 0 {
        return Err(PolicyError::ZeroParameter { name: "tq" });
    }
    Ok(match kind {
        PolicyKind::Fcfs => Box::new(Fcfs),
        PolicyKind::Sjf => Box::new(Sjf),
        PolicyKind::Srtf => Box::new(Srtf),
        PolicyKind::Hrrn => Box::new(Hrrn),
        PolicyKind::Rr => Box::new(RoundRobin::new(params.tq)?),
        PolicyKind::Mmrr => Box::new(Mmrr::mmrr(params.alpha)?),
        PolicyKind::Sarr => Box::new(Sarr::sarr()),
        PolicyKind::Smdrr => Box::new(Smdrr::smdrr()),
        PolicyKind::Gbtq => Box::new(Gbtq::new(workload, params.alpha, params.regroup)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_cli_name() {
        for kind in PolicyKind::ALL {
            assert_eq!(kind.as_str().parse::<PolicyKind>(), Ok(kind));
        }
        assert_eq!("GBTQ".parse::<PolicyKind>(), Ok(PolicyKind::Gbtq));
        assert!(matches!("vtrr".parse::<PolicyKind>(), Err(PolicyError::UnknownPolicy(_))));
    }

    #[test]
    fn build_rejects_zero_parameters() {
        let w = Workload::from_bursts("w", [3]).unwrap();
        let params = PolicyParams { alpha: 0, ..Default::default() };
        assert!(build(PolicyKind::Gbtq, &w, params).is_err());
        let params = PolicyParams { tq: 0, ..Default::default() };
        assert!(build(PolicyKind::Rr, &w, params).is_err());
    }
}

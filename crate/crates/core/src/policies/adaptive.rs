//! Round robin variants that recompute one shared quantum every round from the
//! remaining bursts of the ready set: min-max spread (MMRR), median (SARR) and
//! harmonic mean (SMDRR). Each round visits processes by ascending remaining
//! burst.

use super::rounds::{RoundPlanner, RoundPolicy};
use super::PolicyError;
use crate::engine::ProcessState;
use crate::stats;
use crate::workload::{Pid, Time};

/// SARR never grants less than this.
pub const SARR_FLOOR: Time = 25;

/// `max(alpha, max - min)`.
pub fn mmrr_quantum(remaining: &[Time], alpha: Time) -> Time {
    stats::spread(remaining).unwrap_or(0).max(alpha)
}

/// Median rounded up, floored at [`SARR_FLOOR`].
pub fn sarr_quantum(remaining: &[Time]) -> Time {
    stats::median(remaining)
        .map(stats::ceil_ratio)
        .unwrap_or(0)
        .max(SARR_FLOOR)
}

/// Harmonic mean rounded up, at least 1.
pub fn smdrr_quantum(remaining: &[Time]) -> Time {
    stats::harmonic_mean(remaining)
        .map(|h| stats::ceil_big(&h))
        .unwrap_or(0)
        .max(1)
}

/// Shared bookkeeping for single-quantum rounds.
#[derive(Debug, Clone)]
pub struct SharedQuantumPlanner {
    name: &'static str,
    rule: fn(&[Time], Time) -> Time,
    alpha: Time,
    history: Vec<Time>,
}

impl SharedQuantumPlanner {
    /// Quantum chosen for each round so far.
    pub fn history(&self) -> &[Time] {
        &self.history
    }
}

impl RoundPlanner for SharedQuantumPlanner {
    fn name(&self) -> &str {
        self.name
    }

    fn label(&self) -> String {
        if self.history.is_empty() {
            return "adaptive".to_string();
        }
        self.history
            .iter()
            .map(Time::to_string)
            .collect::<Vec<_>>()
            .join("/")
    }

    fn plan(&mut self, ready: &[ProcessState]) -> Vec<(Pid, Time)> {
        let mut order: Vec<_> = ready.iter().map(|p| (p.remaining, p.pid())).collect();
        order.sort_unstable();
        let remaining: Vec<Time> = order.iter().map(|&(r, _)| r).collect();
        let quantum = (self.rule)(&remaining, self.alpha);
        self.history.push(quantum);
        order.into_iter().map(|(_, pid)| (pid, quantum)).collect()
    }
}

pub type Mmrr = RoundPolicy<SharedQuantumPlanner>;
pub type Sarr = RoundPolicy<SharedQuantumPlanner>;
pub type Smdrr = RoundPolicy<SharedQuantumPlanner>;

impl RoundPolicy<SharedQuantumPlanner> {
    fn shared(name: &'static str, rule: fn(&[Time], Time) -> Time, alpha: Time) -> Self {
        Self::from_planner(SharedQuantumPlanner {
            name,
            rule,
            alpha,
            history: Vec::new(),
        })
    }

    pub fn mmrr(alpha: Time) -> Result<Self, PolicyError> {
        if alpha == 0 {
            return Err(PolicyError::ZeroParameter { name: "alpha" });
        }
        Ok(Self::shared("MMRR", mmrr_quantum, alpha))
    }

    pub fn sarr() -> Self {
        Self::shared("SARR", |r, _| sarr_quantum(r), 0)
    }

    pub fn smdrr() -> Self {
        Self::shared("SMDRR", |r, _| smdrr_quantum(r), 0)
    }
}

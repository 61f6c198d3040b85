use std::collections::VecDeque;

use crate::engine::{Dispatch, Policy, ProcessState, SchedulerView};
use crate::workload::{Pid, Time};

/// Plans one round of a round-based policy.
///
/// A round is a snapshot of the arrived, unfinished processes, each granted one
/// quantum. Processes that arrive mid-round wait for the next round.
pub trait RoundPlanner {
    fn name(&self) -> &str;

    fn label(&self) -> String;

    /// Returns the dispatch order for the round with each member's quantum.
    /// `ready` is never empty; every returned quantum must be at least 1.
    fn plan(&mut self, ready: &[ProcessState]) -> Vec<(Pid, Time)>;
}

/// Drives a [`RoundPlanner`] as an engine [`Policy`].
#[derive(Debug, Clone)]
pub struct RoundPolicy<P> {
    planner: P,
    round: VecDeque<(Pid, Time)>,
    rounds: usize,
}

impl<P: RoundPlanner> RoundPolicy<P> {
    pub fn from_planner(planner: P) -> Self {
        Self {
            planner,
            round: VecDeque::new(),
            rounds: 0,
        }
    }

    pub fn planner(&self) -> &P {
        &self.planner
    }

    /// Number of rounds planned so far.
    pub fn rounds(&self) -> usize {
        self.rounds
    }
}

impl<P: RoundPlanner> Policy for RoundPolicy<P> {
    fn name(&self) -> &str {
        self.planner.name()
    }

    fn quantum_label(&self) -> String {
        self.planner.label()
    }

    fn select(&mut self, view: &SchedulerView<'_>) -> Dispatch {
        loop {
            if self.round.is_empty() {
                self.round = self.planner.plan(view.ready).into();
                self.rounds += 1;
                assert!(!self.round.is_empty(), "planner returned an empty round");
            }
            let (pid, quantum) = self.round.pop_front().expect("round is non-empty");
            if view.get(pid).is_some() {
                return Dispatch::units(pid, quantum.max(1));
            }
        }
    }
}

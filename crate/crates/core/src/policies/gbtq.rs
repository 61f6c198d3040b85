//! Group-based time quantum round robin.
//!
//! Bursts are split into four groups at the quartiles. Each group gets one
//! quantum: its min-max spread when that exceeds the threshold `alpha`, else
//! `alpha`. A group whose members all share one burst `b` gets `max(alpha, b)`
//! so such processes finish in a single dispatch; this is the rule that matches
//! the published per-group quanta (46, 82, 95 and 81..84 for singleton groups,
//! 20 for the singleton groups of bursts 7 and 11).
//!
//! Dispatch proceeds in rounds over the ready set sorted by ascending burst.

use serde::Serialize;

use super::rounds::{RoundPlanner, RoundPolicy};
use super::PolicyError;
use crate::engine::ProcessState;
use crate::stats::{self, Quartiles, Rational};
use crate::workload::{Pid, Time, Workload};

/// When the grouping is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RegroupMode {
    /// Once, over every burst in the workload.
    #[default]
    Static,
    /// At the start of every round, over the remaining bursts of the ready set.
    Dynamic,
}

impl std::str::FromStr for RegroupMode {
    type Err = PolicyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "static" => Ok(RegroupMode::Static),
            "dynamic" => Ok(RegroupMode::Dynamic),
            other => Err(PolicyError::UnknownRegroup(other.to_string())),
        }
    }
}

/// The four sub-queues with their quartile bounds and quanta.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupAssignment {
    pub quartiles: Quartiles,
    /// Sub-queues ordered by ascending burst, ties by pid. Any may be empty.
    pub groups: [Vec<Pid>; 4],
    pub quanta: [Time; 4],
    pub alpha: Time,
}

impl GroupAssignment {
    pub fn group_of(&self, pid: Pid) -> Option<usize> {
        self.groups.iter().position(|g| g.contains(&pid))
    }

    pub fn quantum_of(&self, pid: Pid) -> Option<Time> {
        self.group_of(pid).map(|g| self.quanta[g])
    }

    /// Quanta joined as `q1, q2, q3, q4`.
    pub fn quanta_label(&self) -> String {
        self.quanta
            .iter()
            .map(Time::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Partitions `(pid, burst)` pairs at the quartiles and assigns group quanta.
pub fn group_processes(
    bursts: &[(Pid, Time)],
    alpha: Time,
) -> Result<GroupAssignment, PolicyError> {
    if alpha == 0 {
        return Err(PolicyError::ZeroParameter { name: "alpha" });
    }
    let values: Vec<Time> = bursts.iter().map(|&(_, b)| b).collect();
    let quartiles = stats::quartiles(&values).map_err(|_| PolicyError::EmptyGroup)?;

    let mut sorted = bursts.to_vec();
    sorted.sort_by_key(|&(pid, b)| (b, pid));

    let mut groups: [Vec<Pid>; 4] = Default::default();
    let mut members: [Vec<Time>; 4] = Default::default();
    for (pid, burst) in sorted {
        let b = Rational::from_integer(burst as i64);
        let g = if b <= quartiles.q1 {
            0
        } else if b <= quartiles.q2 {
            1
        } else if b <= quartiles.q3 {
            2
        } else {
            3
        };
        groups[g].push(pid);
        members[g].push(burst);
    }

    let quanta = assign_quanta(
        [&members[0], &members[1], &members[2], &members[3]],
        alpha,
    );
    Ok(GroupAssignment {
        quartiles,
        groups,
        quanta,
        alpha,
    })
}

/// One quantum per group from the members' bursts.
pub fn assign_quanta(groups: [&[Time]; 4], alpha: Time) -> [Time; 4] {
    groups.map(|members| {
        let Ok(spread) = stats::spread(members) else {
            // Empty group, never dispatched.
            return alpha;
        };
        if spread == 0 {
            alpha.max(members[0])
        } else if spread > alpha {
            spread
        } else {
            alpha
        }
    })
}

#[derive(Debug, Clone)]
pub struct GbtqPlanner {
    alpha: Time,
    mode: RegroupMode,
    initial: GroupAssignment,
    history: Vec<GroupAssignment>,
}

impl GbtqPlanner {
    pub fn new(workload: &Workload, alpha: Time, mode: RegroupMode) -> Result<Self, PolicyError> {
        let bursts: Vec<_> = workload
            .processes()
            .iter()
            .map(|p| (p.pid, p.burst))
            .collect();
        let initial = group_processes(&bursts, alpha)?;
        Ok(Self {
            alpha,
            mode,
            initial,
            history: Vec::new(),
        })
    }

    pub fn mode(&self) -> RegroupMode {
        self.mode
    }

    /// The grouping over the full workload.
    pub fn initial(&self) -> &GroupAssignment {
        &self.initial
    }

    /// Per-round groupings. Empty in static mode.
    pub fn history(&self) -> &[GroupAssignment] {
        &self.history
    }
}

impl RoundPlanner for GbtqPlanner {
    fn name(&self) -> &str {
        "GBTQ"
    }

    fn label(&self) -> String {
        match self.mode {
            RegroupMode::Static => self.initial.quanta_label(),
            RegroupMode::Dynamic => {
                let first = self.history.first().unwrap_or(&self.initial);
                format!("{} (dynamic)", first.quanta_label())
            }
        }
    }

    fn plan(&mut self, ready: &[ProcessState]) -> Vec<(Pid, Time)> {
        match self.mode {
            RegroupMode::Static => {
                let mut order: Vec<_> = ready.iter().map(|p| (p.spec.burst, p.pid())).collect();
                order.sort_unstable();
                order
                    .into_iter()
                    .map(|(_, pid)| {
                        let q = self.initial.quantum_of(pid).unwrap_or(self.alpha);
                        (pid, q)
                    })
                    .collect()
            }
            RegroupMode::Dynamic => {
                let remaining: Vec<_> = ready.iter().map(|p| (p.pid(), p.remaining)).collect();
                let assignment =
                    group_processes(&remaining, self.alpha).expect("ready set is non-empty");
                let plan = assignment
                    .groups
                    .iter()
                    .zip(assignment.quanta)
                    .flat_map(|(g, q)| g.iter().map(move |&pid| (pid, q)))
                    .collect::<Vec<_>>();
                // Groups are burst-ordered, so concatenating them keeps ascending order.
                self.history.push(assignment);
                plan
            }
        }
    }
}

pub type Gbtq = RoundPolicy<GbtqPlanner>;

impl RoundPolicy<GbtqPlanner> {
    pub fn new(workload: &Workload, alpha: Time, mode: RegroupMode) -> Result<Self, PolicyError> {
        Ok(Self::from_planner(GbtqPlanner::new(workload, alpha, mode)?))
    }

    pub fn assignment(&self) -> &GroupAssignment {
        self.planner().initial()
    }
}

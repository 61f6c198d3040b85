//! Discrete-time simulation core.
//!
//! The engine owns the clock and process bookkeeping and asks a [`Policy`] what
//! to run at each decision point: time 0, the end of every slice, and any
//! arrival into an idle CPU. A granted quantum always runs to its end (or to
//! the process's completion); preemptive policies that need to react to
//! arrivals grant quanta that end at [`SchedulerView::next_arrival`].
//!
//! After each slice the engine delivers every arrival up to and including the
//! slice end *before* reporting the preemption, so a preempted process re-enters
//! a FIFO queue behind processes that arrived while it ran.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::workload::{Pid, ProcessSpec, Time, Workload};

/// One contiguous CPU allocation, `[start, end)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Slice {
    pub pid: Pid,
    pub start: Time,
    pub end: Time,
}

impl Slice {
    pub fn duration(&self) -> Time {
        self.end - self.start
    }
}

/// How long a dispatched process may run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantum {
    Units(Time),
    ToCompletion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dispatch {
    pub pid: Pid,
    pub quantum: Quantum,
}

impl Dispatch {
    pub fn units(pid: Pid, quantum: Time) -> Self {
        Self {
            pid,
            quantum: Quantum::Units(quantum),
        }
    }

    pub fn to_completion(pid: Pid) -> Self {
        Self {
            pid,
            quantum: Quantum::ToCompletion,
        }
    }
}

/// Per-process simulation state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProcessState {
    pub spec: ProcessSpec,
    pub remaining: Time,
    pub first_start: Option<Time>,
    pub finish: Option<Time>,
}

impl ProcessState {
    fn new(spec: ProcessSpec) -> Self {
        Self {
            spec,
            remaining: spec.burst,
            first_start: None,
            finish: None,
        }
    }

    pub fn pid(&self) -> Pid {
        self.spec.pid
    }

    pub fn is_finished(&self) -> bool {
        self.remaining == 0
    }
}

/// What a policy sees when it has to choose.
#[derive(Debug)]
pub struct SchedulerView<'a> {
    pub now: Time,
    /// Arrived, unfinished processes in submission order. Never empty.
    pub ready: &'a [ProcessState],
    /// Earliest arrival strictly after `now`, if any process has yet to arrive.
    pub next_arrival: Option<Time>,
}

impl SchedulerView<'_> {
    pub fn get(&self, pid: Pid) -> Option<&ProcessState> {
        self.ready.iter().find(|p| p.pid() == pid)
    }
}

/// A dispatch policy. One instance drives exactly one run.
///
/// The notification hooks are delivered in simulation order; policies that
/// keep their own queues (round robin) rely on that ordering.
pub trait Policy {
    fn name(&self) -> &str;

    /// Human-readable quantum setting, e.g. `20` or `20, 46, 82, 95`.
    fn quantum_label(&self) -> String {
        "-".to_string()
    }

    fn on_arrival(&mut self, _process: &ProcessSpec, _now: Time) {}

    fn on_preempt(&mut self, _pid: Pid, _now: Time) {}

    fn on_complete(&mut self, _pid: Pid, _now: Time) {}

    /// Chooses the next process. Called only when `view.ready` is non-empty.
    fn select(&mut self, view: &SchedulerView<'_>) -> Dispatch;
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("policy `{policy}` selected {pid} at t={now}, which is not ready")]
    NotReady { policy: String, pid: Pid, now: Time },
    #[error("policy `{policy}` granted a zero quantum to {pid} at t={now}")]
    ZeroQuantum { policy: String, pid: Pid, now: Time },
}

/// The complete output of a run: the slice sequence for a workload.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Schedule {
    workload: Workload,
    slices: Vec<Slice>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantViolation {
    #[error("slice {index} is empty or reversed")]
    EmptySlice { index: usize },
    #[error("slice {index} overlaps or precedes its predecessor")]
    Overlap { index: usize },
    #[error("slice {index} runs unknown process {pid}")]
    UnknownProcess { index: usize, pid: Pid },
    #[error("slice {index} starts before {pid} arrives")]
    EarlyStart { index: usize, pid: Pid },
    #[error("{pid} received {got} units of CPU, burst is {burst}")]
    Conservation { pid: Pid, got: Time, burst: Time },
    #[error("CPU idle over [{from}, {to}) while {pid} was ready")]
    IdleWhileReady { from: Time, to: Time, pid: Pid },
}

impl Schedule {
    /// Wraps an arbitrary slice sequence. Use [`Schedule::check`] to validate it.
    pub fn new(workload: Workload, slices: Vec<Slice>) -> Self {
        Self { workload, slices }
    }

    pub fn workload(&self) -> &Workload {
        &self.workload
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    /// Adjacent contiguous slices of the same process folded into one.
    pub fn merged(&self) -> Vec<Slice> {
        let mut out: Vec<Slice> = Vec::with_capacity(self.slices.len());
        for s in &self.slices {
            match out.last_mut() {
                Some(last) if last.pid == s.pid && last.end == s.start => last.end = s.end,
                _ => out.push(*s),
            }
        }
        out
    }

    pub fn executed(&self, pid: Pid) -> Time {
        self.slices
            .iter()
            .filter(|s| s.pid == pid)
            .map(Slice::duration)
            .sum()
    }

    pub fn first_start(&self, pid: Pid) -> Option<Time> {
        self.slices.iter().find(|s| s.pid == pid).map(|s| s.start)
    }

    pub fn finish(&self, pid: Pid) -> Option<Time> {
        let burst = self.workload.get(pid)?.burst;
        if self.executed(pid) != burst {
            return None;
        }
        self.slices.iter().rev().find(|s| s.pid == pid).map(|s| s.end)
    }

    pub fn makespan(&self) -> Time {
        self.slices.last().map_or(0, |s| s.end)
    }

    pub fn is_complete(&self) -> bool {
        self.workload
            .processes()
            .iter()
            .all(|p| self.executed(p.pid) == p.burst)
    }

    /// Verifies ordering, per-process conservation, no early starts, and that
    /// the CPU never idles while an arrived, unfinished process exists.
    pub fn check(&self) -> Result<(), InvariantViolation> {
        let mut prev_end = 0;
        for (index, s) in self.slices.iter().enumerate() {
            if s.end <= s.start {
                return Err(InvariantViolation::EmptySlice { index });
            }
            if s.start < prev_end {
                return Err(InvariantViolation::Overlap { index });
            }
            let spec = self
                .workload
                .get(s.pid)
                .ok_or(InvariantViolation::UnknownProcess { index, pid: s.pid })?;
            if s.start < spec.arrival {
                return Err(InvariantViolation::EarlyStart { index, pid: s.pid });
            }
            prev_end = s.end;
        }
        for p in self.workload.processes() {
            let got = self.executed(p.pid);
            if got != p.burst {
                return Err(InvariantViolation::Conservation {
                    pid: p.pid,
                    got,
                    burst: p.burst,
                });
            }
        }
        let mut cursor = 0;
        for s in &self.slices {
            if s.start > cursor {
                self.check_idle(cursor, s.start)?;
            }
            cursor = s.end;
        }
        Ok(())
    }

    fn check_idle(&self, from: Time, to: Time) -> Result<(), InvariantViolation> {
        for p in self.workload.processes() {
            let finish = self.finish(p.pid).unwrap_or(Time::MAX);
            if p.arrival < to && finish > from {
                return Err(InvariantViolation::IdleWhileReady {
                    from,
                    to,
                    pid: p.pid,
                });
            }
        }
        Ok(())
    }
}

/// Number of hand-offs between different processes.
///
/// Slices are merged first, so a process granted back-to-back quanta does not
/// count, and the final completion counts zero.
pub fn context_switches(schedule: &Schedule) -> usize {
    schedule.merged().len().saturating_sub(1)
}

impl fmt::Display for Schedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.merged().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}[{},{})", s.pid, s.start, s.end)?;
        }
        Ok(())
    }
}

/// Simulates `workload` under `policy` until every process finishes.
pub fn run(workload: &Workload, policy: &mut dyn Policy) -> Result<Schedule, EngineError> {
    let mut states: Vec<ProcessState> = workload
        .processes()
        .iter()
        .copied()
        .map(ProcessState::new)
        .collect();
    let mut arrival_order: Vec<usize> = (0..states.len()).collect();
    arrival_order.sort_by_key(|&i| (states[i].spec.arrival, states[i].spec.pid));

    let mut arrived = vec![false; states.len()];
    let mut next = 0;
    let mut unfinished = states.len();
    let mut now: Time = 0;
    let mut slices = Vec::new();

    let admit = |now: Time, next: &mut usize, arrived: &mut [bool], policy: &mut dyn Policy| {
        while let Some(&i) = arrival_order.get(*next) {
            if arrival_of(workload, i) > now {
                break;
            }
            arrived[i] = true;
            policy.on_arrival(&workload.processes()[i], now);
            *next += 1;
        }
        arrival_order.get(*next).map(|&i| arrival_of(workload, i))
    };

    let mut next_arrival = admit(now, &mut next, &mut arrived, policy);
    while unfinished > 0 {
        let ready: Vec<ProcessState> = states
            .iter()
            .zip(&arrived)
            .filter(|(s, &a)| a && !s.is_finished())
            .map(|(s, _)| *s)
            .collect();
        if ready.is_empty() {
            // Idle until the next arrival; there must be one since work remains.
            now = next_arrival.expect("unfinished process never arrives");
            next_arrival = admit(now, &mut next, &mut arrived, policy);
            continue;
        }

        let view = SchedulerView {
            now,
            ready: &ready,
            next_arrival,
        };
        let dispatch = policy.select(&view);
        let idx = states
            .iter()
            .position(|s| s.pid() == dispatch.pid)
            .filter(|&i| arrived[i] && !states[i].is_finished())
            .ok_or_else(|| EngineError::NotReady {
                policy: policy.name().to_string(),
                pid: dispatch.pid,
                now,
            })?;
        let state = &mut states[idx];
        let run_for = match dispatch.quantum {
            Quantum::Units(0) => {
                return Err(EngineError::ZeroQuantum {
                    policy: policy.name().to_string(),
                    pid: dispatch.pid,
                    now,
                })
            }
            Quantum::Units(q) => q.min(state.remaining),
            Quantum::ToCompletion => state.remaining,
        };

        state.first_start.get_or_insert(now);
        state.remaining -= run_for;
        slices.push(Slice {
            pid: dispatch.pid,
            start: now,
            end: now + run_for,
        });
        now += run_for;
        let finished = state.remaining == 0;
        if finished {
            state.finish = Some(now);
            unfinished -= 1;
        }

        next_arrival = admit(now, &mut next, &mut arrived, policy);
        if finished {
            policy.on_complete(dispatch.pid, now);
        } else {
            policy.on_preempt(dispatch.pid, now);
        }
    }

    Ok(Schedule::new(workload.clone(), slices))
}

fn arrival_of(workload: &Workload, i: usize) -> Time {
    workload.processes()[i].arrival
}

use std::collections::VecDeque;

use serde::Serialize;

use super::PolicyError;
use crate::engine::{Dispatch, Policy, SchedulerView};
use crate::stats::Rational;
use crate::workload::{Pid, ProcessSpec, Time};

/// First come, first served. Non-preemptive; ties by pid.
#[derive(Debug, Default, Clone)]
pub struct Fcfs;

impl Policy for Fcfs {
    fn name(&self) -> &str {
        "FCFS"
    }

    fn select(&mut self, view: &SchedulerView<'_>) -> Dispatch {
        let p = view
            .ready
            .iter()
            .min_by_key(|p| (p.spec.arrival, p.pid()))
            .expect("select called with an empty ready set");
        Dispatch::to_completion(p.pid())
    }
}

/// Shortest job first. Non-preemptive; ties by arrival, then pid.
#[derive(Debug, Default, Clone)]
pub struct Sjf;

impl Policy for Sjf {
    fn name(&self) -> &str {
        "SJF"
    }

    fn select(&mut self, view: &SchedulerView<'_>) -> Dispatch {
        let p = view
            .ready
            .iter()
            .min_by_key(|p| (p.spec.burst, p.spec.arrival, p.pid()))
            .expect("select called with an empty ready set");
        Dispatch::to_completion(p.pid())
    }
}

/// Shortest remaining time first.
///
/// Runs the shortest remaining process until it finishes or the next arrival,
/// whichever is sooner, so every arrival is a fresh decision point. Ties keep
/// the earlier arrival.
#[derive(Debug, Default, Clone)]
pub struct Srtf;

impl Policy for Srtf {
    fn name(&self) -> &str {
        "SRTF"
    }

    fn select(&mut self, view: &SchedulerView<'_>) -> Dispatch {
        let p = view
            .ready
            .iter()
            .min_by_key(|p| (p.remaining, p.spec.arrival, p.pid()))
            .expect("select called with an empty ready set");
        let quantum = match view.next_arrival {
            Some(t) => (t - view.now).min(p.remaining),
            None => p.remaining,
        };
        Dispatch::units(p.pid(), quantum)
    }
}

/// A candidate's response ratio at a decision point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CandidateScore {
    pub pid: Pid,
    #[serde(serialize_with = "crate::report::ser_ratio")]
    pub response_ratio: Rational,
}

/// `(waiting + burst) / burst` for every ready process, in view order.
pub fn hrrn_scores(view: &SchedulerView<'_>) -> Vec<CandidateScore> {
    view.ready
        .iter()
        .map(|p| {
            let waiting = view.now - p.spec.arrival - (p.spec.burst - p.remaining);
            CandidateScore {
                pid: p.pid(),
                response_ratio: Rational::new(
                    (waiting + p.spec.burst) as i64,
                    p.spec.burst as i64,
                ),
            }
        })
        .collect()
}

/// Highest response ratio next. Non-preemptive; ties by arrival, then pid.
#[derive(Debug, Default, Clone)]
pub struct Hrrn;

impl Policy for Hrrn {
    fn name(&self) -> &str {
        "HRRN"
    }

    fn select(&mut self, view: &SchedulerView<'_>) -> Dispatch {
        let scores = hrrn_scores(view);
        let best = scores
            .iter()
            .zip(view.ready)
            .max_by(|(a, pa), (b, pb)| {
                a.response_ratio
                    .cmp(&b.response_ratio)
                    // Earlier arrival and lower pid win ties, so reverse them.
                    .then_with(|| (pb.spec.arrival, pb.pid()).cmp(&(pa.spec.arrival, pa.pid())))
            })
            .expect("select called with an empty ready set");
        Dispatch::to_completion(best.0.pid)
    }
}

/// Fixed-quantum round robin over a FIFO circular queue.
#[derive(Debug, Clone)]
pub struct RoundRobin {
    quantum: Time,
    queue: VecDeque<Pid>,
}

impl RoundRobin {
    pub fn new(quantum: Time) -> Result<Self, PolicyError> {
        if quantum == 0 {
            return Err(PolicyError::ZeroParameter { name: "tq" });
        }
        Ok(Self {
            quantum,
            queue: VecDeque::new(),
        })
    }
}

impl Policy for RoundRobin {
    fn name(&self) -> &str {
        "RR"
    }

    fn quantum_label(&self) -> String {
        self.quantum.to_string()
    }

    fn on_arrival(&mut self, process: &ProcessSpec, _now: Time) {
        self.queue.push_back(process.pid);
    }

    fn on_preempt(&mut self, pid: Pid, _now: Time) {
        self.queue.push_back(pid);
    }

    fn select(&mut self, _view: &SchedulerView<'_>) -> Dispatch {
        let pid = self
            .queue
            .pop_front()
            .expect("round robin queue out of sync with ready set");
        Dispatch::units(pid, self.quantum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{context_switches, run, ProcessState, Slice};
    use crate::workload::{builtin_case, Workload};

    fn finishes(w: &Workload, policy: &mut dyn Policy) -> Vec<Time> {
        let s = run(w, policy).unwrap();
        s.check().unwrap();
        w.processes().iter().map(|p| s.finish(p.pid).unwrap()).collect()
    }

    #[test]
    fn fcfs_case_two() {
        let (w, _) = builtin_case(2).unwrap();
        assert_eq!(finishes(&w, &mut Fcfs), [11, 57, 139, 234]);
    }

    #[test]
    fn fcfs_respects_arrival_then_pid() {
        let w = Workload::new(
            "w",
            vec![
                ProcessSpec::new(3, 2, 1).unwrap(),
                ProcessSpec::new(2, 0, 4).unwrap(),
                ProcessSpec::new(1, 0, 2).unwrap(),
            ],
        )
        .unwrap();
        let s = run(&w, &mut Fcfs).unwrap();
        let order: Vec<_> = s.merged().iter().map(|s| s.pid.0).collect();
        assert_eq!(order, [1, 2, 3]);
    }

    #[test]
    fn sjf_runs_shortest_first() {
        let w = Workload::from_bursts("w", [3, 1]).unwrap();
        let s = run(&w, &mut Sjf).unwrap();
        let order: Vec<_> = s.merged().iter().map(|s| s.pid.0).collect();
        assert_eq!(order, [2, 1]);
    }

    #[test]
    fn sjf_is_non_preemptive() {
        let w = Workload::from_pairs("w", [(0, 10), (1, 1)]).unwrap();
        let s = run(&w, &mut Sjf).unwrap();
        assert_eq!(s.merged()[0], Slice { pid: Pid(1), start: 0, end: 10 });
    }

    #[test]
    fn srtf_preempts_on_arrival() {
        let w = Workload::from_pairs("w", [(0, 8), (1, 4)]).unwrap();
        let s = run(&w, &mut Srtf).unwrap();
        assert_eq!(
            s.merged(),
            [
                Slice { pid: Pid(1), start: 0, end: 1 },
                Slice { pid: Pid(2), start: 1, end: 5 },
                Slice { pid: Pid(1), start: 5, end: 12 },
            ]
        );
        assert_eq!(context_switches(&s), 2);
    }

    #[test]
    fn srtf_keeps_running_process_when_arrival_is_longer() {
        let w = Workload::from_pairs("w", [(0, 4), (1, 9)]).unwrap();
        let s = run(&w, &mut Srtf).unwrap();
        assert_eq!(s.merged().len(), 2);
        assert_eq!(context_switches(&s), 1);
    }

    #[test]
    fn hrrn_prefers_long_waiters() {
        // At t=10: P2 waited 9 with burst 9 -> 2.0; P3 waited 8 with burst 2 -> 5.0.
        let w = Workload::from_pairs("w", [(0, 10), (1, 9), (2, 2)]).unwrap();
        let s = run(&w, &mut Hrrn).unwrap();
        let order: Vec<_> = s.merged().iter().map(|s| s.pid.0).collect();
        assert_eq!(order, [1, 3, 2]);
    }

    #[test]
    fn hrrn_scores_are_at_least_one() {
        let w = Workload::from_pairs("w", [(0, 5), (0, 7)]).unwrap();
        let ready = [
            ProcessState {
                spec: w.processes()[0],
                remaining: 5,
                first_start: None,
                finish: None,
            },
            ProcessState {
                spec: w.processes()[1],
                remaining: 7,
                first_start: None,
                finish: None,
            },
        ];
        let view = SchedulerView { now: 0, ready: &ready, next_arrival: None };
        let scores = hrrn_scores(&view);
        assert!(scores.iter().all(|s| s.response_ratio == Rational::from_integer(1)));
        let view = SchedulerView { now: 14, ready: &ready, next_arrival: None };
        assert_eq!(hrrn_scores(&view)[1].response_ratio, Rational::new(3, 1));
    }

    #[test]
    fn rr_case_two_trace() {
        let (w, _) = builtin_case(2).unwrap();
        let s = run(&w, &mut RoundRobin::new(20).unwrap()).unwrap();
        let head: Vec<_> = s.slices().iter().take(5).map(|s| (s.pid.0, s.start, s.end)).collect();
        assert_eq!(head, [(1, 0, 11), (2, 11, 31), (3, 31, 51), (4, 51, 71), (2, 71, 91)]);
        let fin: Vec<_> = w.processes().iter().map(|p| s.finish(p.pid).unwrap()).collect();
        assert_eq!(fin, [11, 137, 219, 234]);
        assert_eq!(context_switches(&s), 13);
    }

    #[test]
    fn rr_requeues_behind_arrivals() {
        // P2 arrives during P1's first quantum and must run before P1 resumes.
        let w = Workload::from_pairs("w", [(0, 6), (2, 2)]).unwrap();
        let s = run(&w, &mut RoundRobin::new(4).unwrap()).unwrap();
        let order: Vec<_> = s.slices().iter().map(|s| (s.pid.0, s.start, s.end)).collect();
        assert_eq!(order, [(1, 0, 4), (2, 4, 6), (1, 6, 8)]);
    }

    #[test]
    fn rr_single_process_has_no_switches() {
        let w = Workload::from_bursts("w", [55]).unwrap();
        let s = run(&w, &mut RoundRobin::new(20).unwrap()).unwrap();
        assert_eq!(s.slices().len(), 3);
        assert_eq!(s.merged().len(), 1);
        assert_eq!(context_switches(&s), 0);
    }
}

//! Test-only helpers, including a unit-step reference simulator that shares no
//! code with the engine or the policies.

#![allow(dead_code)]

use std::collections::VecDeque;

use gbtq::{Schedule, Workload};

/// Which process held the CPU during each unit of time; `None` is idle.
pub type Timeline = Vec<Option<u32>>;

pub fn timeline(schedule: &Schedule) -> Timeline {
    let mut out = vec![None; schedule.makespan() as usize];
    for s in schedule.slices() {
        for t in s.start..s.end {
            out[t as usize] = Some(s.pid.0);
        }
    }
    out
}

/// `(pid, arrival, burst)` triples.
pub fn triples(w: &Workload) -> Vec<(u32, u64, u64)> {
    w.processes()
        .iter()
        .map(|p| (p.pid.0, p.arrival, p.burst))
        .collect()
}

fn arrivals_at(procs: &[(u32, u64, u64)], t: u64) -> Vec<u32> {
    let mut v: Vec<_> = procs.iter().filter(|p| p.1 == t).map(|p| p.0).collect();
    v.sort_unstable();
    v
}

/// Unit-step round robin. Arrivals at a tick boundary join the queue before a
/// process whose quantum expired at that boundary.
pub fn tick_rr(procs: &[(u32, u64, u64)], quantum: u64) -> Timeline {
    let mut remaining: Vec<u64> = procs.iter().map(|p| p.2).collect();
    let idx = |pid: u32| procs.iter().position(|p| p.0 == pid).unwrap();
    let mut queue = VecDeque::new();
    let mut current: Option<(u32, u64)> = None;
    let mut out = Vec::new();
    let mut t = 0;
    while remaining.iter().any(|&r| r > 0) {
        queue.extend(arrivals_at(procs, t));
        if let Some((pid, used)) = current {
            if remaining[idx(pid)] == 0 {
                current = None;
            } else if used == quantum {
                queue.push_back(pid);
                current = None;
            }
        }
        if current.is_none() {
            current = queue.pop_front().map(|pid| (pid, 0));
        }
        match current.as_mut() {
            Some((pid, used)) => {
                remaining[idx(*pid)] -= 1;
                *used += 1;
                out.push(Some(*pid));
            }
            None => out.push(None),
        }
        t += 1;
    }
    out
}

/// Doubled quartiles (2*q1, 2*q2, 2*q3) by exclusive median-of-halves, kept
/// in integers.
pub fn doubled_quartiles(values: &[u64]) -> (u64, u64, u64) {
    let mut v = values.to_vec();
    v.sort_unstable();
    let doubled_median = |s: &[u64]| {
        let n = s.len();
        if n % 2 == 1 {
            2 * s[n / 2]
        } else {
            s[n / 2 - 1] + s[n / 2]
        }
    };
    let n = v.len();
    if n == 1 {
        return (2 * v[0], 2 * v[0], 2 * v[0]);
    }
    let lower: Vec<u64> = v[..n / 2].to_vec();
    let upper: Vec<u64> = v[n - n / 2..].to_vec();
    (doubled_median(&lower), doubled_median(&v), doubled_median(&upper))
}

/// Per-process quantum under the group rule, computed from scratch.
pub fn oracle_group_quanta(procs: &[(u32, u64, u64)], alpha: u64) -> Vec<(u32, u64)> {
    let bursts: Vec<u64> = procs.iter().map(|p| p.2).collect();
    let (q1, q2, q3) = doubled_quartiles(&bursts);
    let group = |b: u64| {
        let b2 = 2 * b;
        if b2 <= q1 {
            0
        } else if b2 <= q2 {
            1
        } else if b2 <= q3 {
            2
        } else {
            3
        }
    };
    let mut quanta = [alpha; 4];
    for (g, quantum) in quanta.iter_mut().enumerate() {
        let members: Vec<u64> = bursts.iter().copied().filter(|&b| group(b) == g).collect();
        if members.is_empty() {
            continue;
        }
        let hi = *members.iter().max().unwrap();
        let lo = *members.iter().min().unwrap();
        *quantum = if hi == lo {
            alpha.max(hi)
        } else if hi - lo > alpha {
            hi - lo
        } else {
            alpha
        };
    }
    procs.iter().map(|p| (p.0, quanta[group(p.2)])).collect()
}

/// Unit-step static-grouping GBTQ: rounds over the arrived, unfinished set by
/// ascending burst; later arrivals wait for the next round.
pub fn tick_gbtq(procs: &[(u32, u64, u64)], alpha: u64) -> Timeline {
    let quanta = oracle_group_quanta(procs, alpha);
    let quantum_of = |pid: u32| quanta.iter().find(|q| q.0 == pid).unwrap().1;
    let idx = |pid: u32| procs.iter().position(|p| p.0 == pid).unwrap();
    let mut remaining: Vec<u64> = procs.iter().map(|p| p.2).collect();
    let mut round: VecDeque<u32> = VecDeque::new();
    let mut current: Option<(u32, u64)> = None;
    let mut out = Vec::new();
    let mut t = 0;
    while remaining.iter().any(|&r| r > 0) {
        if let Some((pid, used)) = current {
            if remaining[idx(pid)] == 0 || used == quantum_of(pid) {
                current = None;
            }
        }
        if current.is_none() {
            if round.is_empty() {
                let mut ready: Vec<_> = procs
                    .iter()
                    .filter(|p| p.1 <= t && remaining[idx(p.0)] > 0)
                    .map(|p| (p.2, p.0))
                    .collect();
                ready.sort_unstable();
                round = ready.into_iter().map(|(_, pid)| pid).collect();
            }
            current = round.pop_front().map(|pid| (pid, 0));
        }
        match current.as_mut() {
            Some((pid, used)) => {
                remaining[idx(*pid)] -= 1;
                *used += 1;
                out.push(Some(*pid));
            }
            None => out.push(None),
        }
        t += 1;
    }
    out
}

/// Unit-step non-preemptive scheduler choosing by `key` among arrived processes.
pub fn tick_nonpreemptive<K: Ord>(
    procs: &[(u32, u64, u64)],
    key: impl Fn(&(u32, u64, u64)) -> K,
) -> Timeline {
    let idx = |pid: u32| procs.iter().position(|p| p.0 == pid).unwrap();
    let mut remaining: Vec<u64> = procs.iter().map(|p| p.2).collect();
    let mut current: Option<u32> = None;
    let mut out = Vec::new();
    let mut t = 0;
    while remaining.iter().any(|&r| r > 0) {
        if current.is_some_and(|pid| remaining[idx(pid)] == 0) {
            current = None;
        }
        if current.is_none() {
            current = procs
                .iter()
                .filter(|p| p.1 <= t && remaining[idx(p.0)] > 0)
                .min_by_key(|p| key(p))
                .map(|p| p.0);
        }
        match current {
            Some(pid) => {
                remaining[idx(pid)] -= 1;
                out.push(Some(pid));
            }
            None => out.push(None),
        }
        t += 1;
    }
    out
}

/// Average waiting time numerator: sum over processes of finish - arrival - burst.
pub fn total_wait(procs: &[(u32, u64, u64)], tl: &Timeline) -> u64 {
    procs
        .iter()
        .map(|&(pid, arrival, burst)| {
            let finish = tl.iter().rposition(|&x| x == Some(pid)).unwrap() as u64 + 1;
            finish - arrival - burst
        })
        .sum()
}

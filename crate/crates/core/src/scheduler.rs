//! Single-CPU scheduling simulator.
//!
//! Two policies share one trace model: classic round robin with a fixed
//! quantum, and sorted round robin whose quantum is recomputed by a fuzzy
//! system whenever new work arrives. Time is exact ([`Ticks`]), runs are
//! deterministic, and context-switch cost is zero.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::fuzzy::{FisDefinition, FuzzyError};
use crate::lrrtq;
use crate::time::{Mean, Ticks, TICKS_PER_UNIT};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScheduleError {
    #[error("workload is empty")]
    EmptyWorkload,
    #[error("duplicate pid `{0}`")]
    DuplicatePid(String),
    #[error("process `{0}` has a non-positive burst time")]
    NonPositiveBurst(String),
    #[error("time quantum must be positive")]
    NonPositiveQuantum,
    #[error("inferred quantum {value} at t={at} is not a positive tick count")]
    InvalidInferredQuantum { at: Ticks, value: f64 },
    #[error(transparent)]
    Inference(#[from] FuzzyError),
    #[error("trace references unknown pid `{0}`")]
    UnknownPid(String),
    #[error("trace slice for `{0}` has zero duration")]
    EmptySlice(String),
    #[error("trace slice for `{pid}` starts at {start}, before the previous slice ends at {prev_end}")]
    Overlap {
        pid: String,
        start: Ticks,
        prev_end: Ticks,
    },
    #[error("trace runs `{pid}` at {start}, before it arrives at {arrival}")]
    RunsBeforeArrival {
        pid: String,
        start: Ticks,
        arrival: Ticks,
    },
    #[error("trace gives `{pid}` {executed} of CPU time, but its burst is {burst}")]
    BurstMismatch {
        pid: String,
        executed: Ticks,
        burst: Ticks,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProcessSpec {
    pub pid: String,
    pub arrival: Ticks,
    pub burst: Ticks,
}

impl ProcessSpec {
    pub fn new(pid: impl Into<String>, arrival: Ticks, burst: Ticks) -> Self {
        Self {
            pid: pid.into(),
            arrival,
            burst,
        }
    }
}

/// Non-empty list of processes with unique pids and positive bursts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Workload {
    processes: Vec<ProcessSpec>,
}

impl Workload {
    pub fn new(processes: Vec<ProcessSpec>) -> Result<Self, ScheduleError> {
        if processes.is_empty() {
            return Err(ScheduleError::EmptyWorkload);
        }
        let mut seen = HashMap::new();
        for p in &processes {
            if p.burst.is_zero() {
                return Err(ScheduleError::NonPositiveBurst(p.pid.clone()));
            }
            if seen.insert(p.pid.as_str(), ()).is_some() {
                return Err(ScheduleError::DuplicatePid(p.pid.clone()));
            }
        }
        Ok(Self { processes })
    }

    /// Workload where every process arrives at 0, pids `P1..Pn`.
    pub fn from_bursts<I: IntoIterator<Item = Ticks>>(bursts: I) -> Result<Self, ScheduleError> {
        Self::new(
            bursts
                .into_iter()
                .enumerate()
                .map(|(i, b)| ProcessSpec::new(format!("P{}", i + 1), Ticks::ZERO, b))
                .collect(),
        )
    }

    pub fn processes(&self) -> &[ProcessSpec] {
        &self.processes
    }

    pub fn len(&self) -> usize {
        self.processes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.processes.is_empty()
    }

    pub fn total_burst(&self) -> Ticks {
        self.processes.iter().map(|p| p.burst).sum()
    }

    // Indices ordered by (arrival, input position).
    fn arrival_order(&self) -> VecDeque<usize> {
        let mut order: Vec<usize> = (0..self.processes.len()).collect();
        order.sort_by_key(|&i| self.processes[i].arrival);
        order.into()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SliceEnd {
    QuantumExpired,
    Completed,
    /// Quantum expired and new arrivals forced a fresh quantum computation.
    Requantize,
}

impl SliceEnd {
    pub fn as_str(self) -> &'static str {
        match self {
            SliceEnd::QuantumExpired => "quantum_expired",
            SliceEnd::Completed => "completed",
            SliceEnd::Requantize => "requantize",
        }
    }
}

impl fmt::Display for SliceEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One contiguous dispatch of a process on the CPU.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExecutionSlice {
    pub pid: String,
    pub start: Ticks,
    pub duration: Ticks,
    pub reason: SliceEnd,
}

impl ExecutionSlice {
    pub fn end(&self) -> Ticks {
        self.start + self.duration
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProcessMetrics {
    pub pid: String,
    pub arrival: Ticks,
    pub burst: Ticks,
    pub completion: Ticks,
    pub turnaround: Ticks,
    pub waiting: Ticks,
}

/// A quantum chosen by the dynamic policy and the queue state it saw.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumChoice {
    pub at: Ticks,
    pub quantum: Ticks,
    pub queue_len: usize,
    pub mean_remaining: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScheduleMetrics {
    /// In workload order.
    pub processes: Vec<ProcessMetrics>,
    pub avg_waiting: Mean,
    pub avg_turnaround: Mean,
    pub avg_burst: Mean,
    /// Number of slices in the trace.
    pub dispatch_count: usize,
    /// Adjacent slice pairs that run different processes.
    pub switch_count: usize,
    /// Empty for the fixed-quantum policy.
    pub quanta_used: Vec<QuantumChoice>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Schedule {
    pub trace: Vec<ExecutionSlice>,
    pub metrics: ScheduleMetrics,
}

/// Derives per-process and aggregate metrics from a trace, checking that
/// the trace is consistent with the workload.
pub fn compute_metrics(
    trace: &[ExecutionSlice],
    workload: &Workload,
) -> Result<ScheduleMetrics, ScheduleError> {
    let index: HashMap<&str, usize> = workload
        .processes
        .iter()
        .enumerate()
        .map(|(i, p)| (p.pid.as_str(), i))
        .collect();
    let mut executed = vec![Ticks::ZERO; workload.len()];
    let mut completion = vec![Ticks::ZERO; workload.len()];
    let mut prev_end = Ticks::ZERO;

    for slice in trace {
        let &i = index
            .get(slice.pid.as_str())
            .ok_or_else(|| ScheduleError::UnknownPid(slice.pid.clone()))?;
        let spec = &workload.processes[i];
        if slice.duration.is_zero() {
            return Err(ScheduleError::EmptySlice(slice.pid.clone()));
        }
        if slice.start < prev_end {
            return Err(ScheduleError::Overlap {
                pid: slice.pid.clone(),
                start: slice.start,
                prev_end,
            });
        }
        if slice.start < spec.arrival {
            return Err(ScheduleError::RunsBeforeArrival {
                pid: slice.pid.clone(),
                start: slice.start,
                arrival: spec.arrival,
            });
        }
        executed[i] += slice.duration;
        completion[i] = slice.end();
        prev_end = slice.end();
    }

    let mut processes = Vec::with_capacity(workload.len());
    for (i, spec) in workload.processes.iter().enumerate() {
        if executed[i] != spec.burst {
            return Err(ScheduleError::BurstMismatch {
                pid: spec.pid.clone(),
                executed: executed[i],
                burst: spec.burst,
            });
        }
        let turnaround = completion[i] - spec.arrival;
        processes.push(ProcessMetrics {
            pid: spec.pid.clone(),
            arrival: spec.arrival,
            burst: spec.burst,
            completion: completion[i],
            turnaround,
            waiting: turnaround - spec.burst,
        });
    }

    let switch_count = trace.windows(2).filter(|w| w[0].pid != w[1].pid).count();
    Ok(ScheduleMetrics {
        avg_waiting: Mean::of(processes.iter().map(|p| p.waiting)),
        avg_turnaround: Mean::of(processes.iter().map(|p| p.turnaround)),
        avg_burst: Mean::of(processes.iter().map(|p| p.burst)),
        processes,
        dispatch_count: trace.len(),
        switch_count,
        quanta_used: Vec::new(),
    })
}

// Mutable simulation state shared by both policies.
struct Run<'a> {
    workload: &'a Workload,
    remaining: Vec<Ticks>,
    pending: VecDeque<usize>,
    now: Ticks,
    trace: Vec<ExecutionSlice>,
}

impl<'a> Run<'a> {
    fn new(workload: &'a Workload) -> Self {
        Self {
            workload,
            remaining: workload.processes.iter().map(|p| p.burst).collect(),
            pending: workload.arrival_order(),
            now: Ticks::ZERO,
            trace: Vec::new(),
        }
    }

    /// Moves everything that has arrived by `now` onto the queue tail.
    fn admit(&mut self, queue: &mut VecDeque<usize>) -> usize {
        let mut admitted = 0;
        while let Some(&i) = self.pending.front() {
            if self.workload.processes[i].arrival > self.now {
                break;
            }
            self.pending.pop_front();
            queue.push_back(i);
            admitted += 1;
        }
        admitted
    }

    /// Idles the CPU until the next arrival. Returns false when nothing is left.
    fn skip_idle(&mut self) -> bool {
        match self.pending.front() {
            Some(&i) => {
                self.now = self.now.max(self.workload.processes[i].arrival);
                true
            }
            None => false,
        }
    }

    /// Runs `i` for up to `quantum`; returns true if it finished.
    fn dispatch(&mut self, i: usize, quantum: Ticks) -> bool {
        let run = quantum.min(self.remaining[i]);
        self.trace.push(ExecutionSlice {
            pid: self.workload.processes[i].pid.clone(),
            start: self.now,
            duration: run,
            reason: SliceEnd::QuantumExpired,
        });
        self.now += run;
        self.remaining[i] -= run;
        self.remaining[i].is_zero()
    }

    fn mark_last(&mut self, reason: SliceEnd) {
        if let Some(slice) = self.trace.last_mut() {
            slice.reason = reason;
        }
    }
}

/// Classic round robin with a fixed quantum.
///
/// The ready queue is FIFO in (arrival, workload position) order. A
/// preempted process rejoins the tail behind anything that arrived during
/// its slice, including arrivals at the exact expiry instant.
pub fn rr_fixed(workload: &Workload, quantum: Ticks) -> Result<Schedule, ScheduleError> {
    if quantum.is_zero() {
        return Err(ScheduleError::NonPositiveQuantum);
    }
    let mut run = Run::new(workload);
    let mut queue = VecDeque::new();
    loop {
        run.admit(&mut queue);
        let Some(i) = queue.pop_front() else {
            if run.skip_idle() {
                continue;
            }
            break;
        };
        let done = run.dispatch(i, quantum);
        run.admit(&mut queue);
        if done {
            run.mark_last(SliceEnd::Completed);
        } else {
            queue.push_back(i);
        }
    }
    let metrics = compute_metrics(&run.trace, workload)?;
    Ok(Schedule {
        trace: run.trace,
        metrics,
    })
}

/// Sorted round robin with a quantum chosen by `choose_quantum`.
///
/// Whenever the queue is (re)formed, i.e. at the start, after an idle gap,
/// or after a slice during which new processes arrived, the queue is sorted
/// by remaining burst (ties by workload position) and
/// `choose_quantum(queue_len, mean_remaining_burst)` picks the quantum used
/// until the next arrival. Arrivals never preempt a running slice.
pub fn rr_dynamic<F>(workload: &Workload, mut choose_quantum: F) -> Result<Schedule, ScheduleError>
where
    F: FnMut(usize, f64) -> Result<f64, ScheduleError>,
{
    let mut run = Run::new(workload);
    let mut queue = VecDeque::new();
    let mut quanta_used = Vec::new();
    let mut quantum = Ticks::ZERO;
    let mut stale = true;
    loop {
        if queue.is_empty() {
            if !run.skip_idle() {
                break;
            }
            run.admit(&mut queue);
            stale = true;
        }
        if stale {
            let remaining = &run.remaining;
            queue.make_contiguous().sort_by_key(|&i| (remaining[i], i));
            let queue_len = queue.len();
            let total: Ticks = queue.iter().map(|&i| remaining[i]).sum();
            let mean_remaining = total.0 as f64 / (queue_len as f64 * TICKS_PER_UNIT as f64);
            let value = choose_quantum(queue_len, mean_remaining)?;
            quantum = match Ticks::from_f64(value) {
                Some(q) if !q.is_zero() => q,
                _ => return Err(ScheduleError::InvalidInferredQuantum { at: run.now, value }),
            };
            quanta_used.push(QuantumChoice {
                at: run.now,
                quantum,
                queue_len,
                mean_remaining,
            });
            stale = false;
        }
        let Some(i) = queue.pop_front() else { continue };
        let done = run.dispatch(i, quantum);
        let arrived = run.admit(&mut queue) > 0;
        if done {
            run.mark_last(SliceEnd::Completed);
        } else {
            if arrived {
                run.mark_last(SliceEnd::Requantize);
            }
            queue.push_back(i);
        }
        stale |= arrived;
    }
    let mut metrics = compute_metrics(&run.trace, workload)?;
    metrics.quanta_used = quanta_used;
    Ok(Schedule {
        trace: run.trace,
        metrics,
    })
}

/// Sorted round robin with the quantum inferred from `fis`, whose inputs
/// must be named [`lrrtq::NOP`] and [`lrrtq::ABT`].
pub fn rr_fuzzy(workload: &Workload, fis: &FisDefinition) -> Result<Schedule, ScheduleError> {
    rr_dynamic(workload, |queue_len, mean_remaining| {
        Ok(lrrtq::quantum(fis, queue_len as f64, mean_remaining)?)
    })
}

/// Fixed and fuzzy policies run on the same workload.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub fixed_quantum: Ticks,
    pub fixed: Schedule,
    pub fuzzy: Schedule,
}

impl Comparison {
    /// The quantum the fuzzy policy started with.
    pub fn inferred_quantum(&self) -> Ticks {
        self.fuzzy.metrics.quanta_used[0].quantum
    }
}

pub fn compare(
    workload: &Workload,
    fis: &FisDefinition,
    fixed_quantum: Ticks,
) -> Result<Comparison, ScheduleError> {
    Ok(Comparison {
        fixed_quantum,
        fixed: rr_fixed(workload, fixed_quantum)?,
        fuzzy: rr_fuzzy(workload, fis)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lrrtq::build_lrrtq;

    fn t(s: &str) -> Ticks {
        s.parse().unwrap()
    }

    fn bursts(values: &[u64]) -> Workload {
        Workload::from_bursts(values.iter().map(|&b| Ticks::from_units(b))).unwrap()
    }

    fn completions(s: &Schedule) -> Vec<String> {
        s.metrics
            .processes
            .iter()
            .map(|p| p.completion.to_string())
            .collect()
    }

    #[test]
    fn workload_validation() {
        assert_eq!(Workload::new(vec![]), Err(ScheduleError::EmptyWorkload));
        assert_eq!(
            Workload::new(vec![ProcessSpec::new("A", Ticks::ZERO, Ticks::ZERO)]),
            Err(ScheduleError::NonPositiveBurst("A".into()))
        );
        assert_eq!(
            Workload::new(vec![
                ProcessSpec::new("A", Ticks::ZERO, t("1")),
                ProcessSpec::new("A", Ticks::ZERO, t("2")),
            ]),
            Err(ScheduleError::DuplicatePid("A".into()))
        );
    }

    #[test]
    fn fixed_rejects_zero_quantum() {
        assert_eq!(
            rr_fixed(&bursts(&[3]), Ticks::ZERO),
            Err(ScheduleError::NonPositiveQuantum)
        );
    }

    #[test]
    fn fixed_single_process() {
        let s = rr_fixed(&bursts(&[5]), t("2.6")).unwrap();
        let p = &s.metrics.processes[0];
        assert_eq!(p.waiting, Ticks::ZERO);
        assert_eq!(p.turnaround, t("5"));
        assert_eq!(s.metrics.dispatch_count, 2);
        assert_eq!(s.metrics.switch_count, 0);
        assert_eq!(s.trace[0].reason, SliceEnd::QuantumExpired);
        assert_eq!(s.trace[1].reason, SliceEnd::Completed);
    }

    #[test]
    fn fixed_case_one_hand_trace() {
        // P1..P4 = 8,5,4,7, q=2.6: completions 24.0, 15.4, 16.8, 23.8
        let s = rr_fixed(&bursts(&[8, 5, 4, 7]), t("2.6")).unwrap();
        assert_eq!(completions(&s), ["24.0000", "15.4000", "16.8000", "23.8000"]);
        assert_eq!(s.metrics.avg_turnaround.format(2), "20.00");
        assert_eq!(s.metrics.avg_waiting.format(2), "14.00");
    }

    #[test]
    fn fixed_case_two_hand_trace() {
        // P1..P3 = 8,10,6, q=2.6: completions 21.8, 24.0, 21.6
        let s = rr_fixed(&bursts(&[8, 10, 6]), t("2.6")).unwrap();
        assert_eq!(completions(&s), ["21.8000", "24.0000", "21.6000"]);
        assert_eq!(s.metrics.avg_waiting.format(2), "14.47");
        assert_eq!(s.metrics.avg_turnaround.format(2), "22.47");
        assert_eq!(s.metrics.dispatch_count, 11);
        assert_eq!(s.metrics.switch_count, 10);

        // q=3.06: completions 20.12, 24.0, 18.24
        let s = rr_fixed(&bursts(&[8, 10, 6]), t("3.06")).unwrap();
        assert_eq!(completions(&s), ["20.1200", "24.0000", "18.2400"]);
        assert_eq!(s.metrics.avg_waiting.format(2), "12.79");
    }

    #[test]
    fn fixed_arrival_at_expiry_enqueues_before_preempted() {
        let w = Workload::new(vec![
            ProcessSpec::new("A", Ticks::ZERO, t("4")),
            ProcessSpec::new("B", t("2"), t("1")),
        ])
        .unwrap();
        let s = rr_fixed(&w, t("2")).unwrap();
        let order: Vec<&str> = s.trace.iter().map(|x| x.pid.as_str()).collect();
        assert_eq!(order, ["A", "B", "A"]);
    }

    #[test]
    fn fixed_idles_until_first_arrival() {
        let w = Workload::new(vec![
            ProcessSpec::new("A", t("3"), t("1")),
            ProcessSpec::new("B", t("10"), t("2")),
        ])
        .unwrap();
        let s = rr_fixed(&w, t("1")).unwrap();
        assert_eq!(s.trace[0].start, t("3"));
        assert_eq!(s.trace[1].start, t("10"));
        assert!(s.metrics.processes.iter().all(|p| p.waiting.is_zero()));
    }

    fn constant(q: &'static str) -> impl FnMut(usize, f64) -> Result<f64, ScheduleError> {
        move |_, _| Ok(q.parse::<f64>().unwrap())
    }

    #[test]
    fn dynamic_sorted_case_one_at_2_61() {
        let s = rr_dynamic(&bursts(&[8, 5, 4, 7]), constant("2.61")).unwrap();
        // P1..P4 complete at 24.0, 14.22, 11.83, 21.22
        assert_eq!(completions(&s), ["24.0000", "14.2200", "11.8300", "21.2200"]);
        assert_eq!(s.metrics.avg_waiting.format(2), "11.82");
        assert_eq!(s.metrics.avg_turnaround.format(2), "17.82");
    }

    #[test]
    fn dynamic_sorted_case_two_at_3_06() {
        let s = rr_dynamic(&bursts(&[8, 10, 6]), constant("3.06")).unwrap();
        assert_eq!(completions(&s), ["20.1200", "24.0000", "12.1200"]);
        assert_eq!(s.metrics.avg_waiting.format(2), "10.75");
    }

    #[test]
    fn fuzzy_uses_unrounded_inferred_quantum() {
        let fis = build_lrrtq();
        let s = rr_fuzzy(&bursts(&[8, 5, 4, 7]), &fis).unwrap();
        let q = &s.metrics.quanta_used;
        assert_eq!(q.len(), 1);
        assert_eq!(q[0].queue_len, 4);
        assert_eq!(q[0].mean_remaining, 6.0);
        assert_eq!(
            Some(q[0].quantum),
            Ticks::from_f64(lrrtq::quantum(&fis, 4.0, 6.0).unwrap())
        );
        assert_eq!(s.metrics.avg_waiting.format(2), "11.82");
        assert_eq!(s.metrics.avg_turnaround.format(2), "17.82");
        // smallest burst finishes first
        let first_done = s.trace.iter().find(|x| x.reason == SliceEnd::Completed).unwrap();
        assert_eq!(first_done.pid, "P3");
    }

    #[test]
    fn dynamic_single_short_process() {
        let s = rr_fuzzy(&bursts(&[2]), &build_lrrtq()).unwrap();
        assert!(s.trace.len() <= 2);
        assert_eq!(s.metrics.processes[0].waiting, Ticks::ZERO);
        assert_eq!(s.metrics.processes[0].turnaround, t("2"));
    }

    #[test]
    fn dynamic_requantizes_on_arrival() {
        let w = Workload::new(vec![
            ProcessSpec::new("A", Ticks::ZERO, t("6")),
            ProcessSpec::new("B", Ticks::ZERO, t("9")),
            ProcessSpec::new("C", t("1"), t("1")),
        ])
        .unwrap();
        let mut seen = Vec::new();
        let s = rr_dynamic(&w, |n, abt| {
            seen.push((n, abt));
            Ok(2.0)
        })
        .unwrap();
        // A runs 0-2 (C arrives meanwhile), then queue {B:9, A:4, C:1} is re-sorted.
        assert_eq!(seen, vec![(2, 7.5), (3, 14.0 / 3.0)]);
        assert_eq!(s.trace[0].reason, SliceEnd::Requantize);
        assert_eq!(s.trace[1].pid, "C");
        assert_eq!(s.trace[2].pid, "A");
        assert_eq!(s.metrics.quanta_used[1].at, t("2"));
    }

    #[test]
    fn dynamic_requantizes_after_idle_gap() {
        let w = Workload::new(vec![
            ProcessSpec::new("A", Ticks::ZERO, t("1")),
            ProcessSpec::new("B", t("5"), t("1")),
        ])
        .unwrap();
        let s = rr_dynamic(&w, constant("3")).unwrap();
        assert_eq!(s.metrics.quanta_used.len(), 2);
        assert_eq!(s.metrics.quanta_used[1].at, t("5"));
        assert_eq!(s.trace[1].start, t("5"));
    }

    #[test]
    fn dynamic_rejects_nonpositive_quantum() {
        let err = rr_dynamic(&bursts(&[3]), |_, _| Ok(0.00001)).unwrap_err();
        assert!(matches!(err, ScheduleError::InvalidInferredQuantum { .. }));
    }

    #[test]
    fn metrics_from_hand_trace() {
        let w = bursts(&[5]);
        let trace = vec![ExecutionSlice {
            pid: "P1".into(),
            start: Ticks::ZERO,
            duration: t("5"),
            reason: SliceEnd::Completed,
        }];
        let m = compute_metrics(&trace, &w).unwrap();
        assert_eq!(m.processes[0].waiting, Ticks::ZERO);
        assert_eq!(m.processes[0].turnaround, t("5"));
    }

    #[test]
    fn metrics_reject_inconsistent_traces() {
        let w = bursts(&[5, 1]);
        let slice = |pid: &str, start: &str, dur: &str| ExecutionSlice {
            pid: pid.into(),
            start: t(start),
            duration: t(dur),
            reason: SliceEnd::Completed,
        };
        assert!(matches!(
            compute_metrics(&[slice("P1", "0", "4"), slice("P2", "4", "1")], &w),
            Err(ScheduleError::BurstMismatch { .. })
        ));
        assert!(matches!(
            compute_metrics(&[slice("P9", "0", "4")], &w),
            Err(ScheduleError::UnknownPid(_))
        ));
        assert!(matches!(
            compute_metrics(&[slice("P1", "0", "5"), slice("P2", "4", "1")], &w),
            Err(ScheduleError::Overlap { .. })
        ));
        let late = Workload::new(vec![ProcessSpec::new("L", t("3"), t("1"))]).unwrap();
        assert!(matches!(
            compute_metrics(&[slice("L", "2", "1")], &late),
            Err(ScheduleError::RunsBeforeArrival { .. })
        ));
    }

    #[test]
    fn compare_single_process_is_identical() {
        let c = compare(&bursts(&[3]), &build_lrrtq(), t("1")).unwrap();
        assert_eq!(c.fixed.metrics.avg_waiting, c.fuzzy.metrics.avg_waiting);
        assert_eq!(c.fixed.metrics.avg_turnaround, c.fuzzy.metrics.avg_turnaround);
    }
}

//! Published reference cases and an audit of computed results against them.
//!
//! Two workloads (all arrivals at 0) come with published averages at one
//! decimal. A cell counts as reproduced when the exact computed average,
//! rounded half-up to one decimal, equals the published figure. Several
//! published cells are known not to be reproducible by any consistent RR
//! trace; the audit reports them as discrepancies with the computed value.

use std::fmt;

use crate::scheduler::{rr_dynamic, Comparison, ScheduleMetrics, Workload};
use crate::time::{Mean, Ticks};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    FixedRr,
    SortedRr,
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Policy::FixedRr => "RR",
            Policy::SortedRr => "sorted RR",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuantumSource {
    /// Column computed with one of these fixed quanta (ticks).
    Fixed(&'static [u64]),
    /// Column computed with the quantum inferred for the workload.
    Inferred,
}

/// One published column: a policy, the quantum it ran with, and its rows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PublishedColumn {
    pub policy: Policy,
    pub quantum_label: &'static str,
    pub quantum: QuantumSource,
    pub avg_waiting: &'static str,
    pub avg_turnaround: &'static str,
    pub context_switches: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceCase {
    pub number: usize,
    pub bursts: &'static [u64],
    pub published_quantum: &'static str,
    pub columns: &'static [PublishedColumn],
}

pub const CASE_1: ReferenceCase = ReferenceCase {
    number: 1,
    bursts: &[8, 5, 4, 7],
    published_quantum: "2.6",
    columns: &[
        PublishedColumn {
            policy: Policy::FixedRr,
            quantum_label: "2.6",
            quantum: QuantumSource::Fixed(&[26_000]),
            avg_waiting: "15.3",
            avg_turnaround: "21.3",
            context_switches: 10,
        },
        PublishedColumn {
            policy: Policy::SortedRr,
            quantum_label: "2.6 (inferred)",
            quantum: QuantumSource::Inferred,
            avg_waiting: "11.8",
            avg_turnaround: "17.8",
            context_switches: 10,
        },
    ],
};

pub const CASE_2: ReferenceCase = ReferenceCase {
    number: 2,
    bursts: &[8, 10, 6],
    published_quantum: "3.0",
    columns: &[
        PublishedColumn {
            policy: Policy::FixedRr,
            quantum_label: "2.6",
            quantum: QuantumSource::Fixed(&[26_000]),
            avg_waiting: "14.5",
            avg_turnaround: "22.5",
            context_switches: 9,
        },
        PublishedColumn {
            policy: Policy::SortedRr,
            quantum_label: "2.6",
            quantum: QuantumSource::Fixed(&[26_000]),
            avg_waiting: "11.8",
            avg_turnaround: "19.8",
            context_switches: 9,
        },
        PublishedColumn {
            policy: Policy::FixedRr,
            quantum_label: "3.0",
            quantum: QuantumSource::Fixed(&[30_000, 30_600]),
            avg_waiting: "12.8",
            avg_turnaround: "17.3",
            context_switches: 8,
        },
        PublishedColumn {
            policy: Policy::SortedRr,
            quantum_label: "3.0 (inferred)",
            quantum: QuantumSource::Inferred,
            avg_waiting: "10.7",
            avg_turnaround: "18",
            context_switches: 8,
        },
    ],
};

pub const CASES: [ReferenceCase; 2] = [CASE_1, CASE_2];

impl ReferenceCase {
    /// Matches a workload whose arrivals are all 0 and whose burst multiset
    /// equals a published case.
    pub fn detect(workload: &Workload) -> Option<&'static ReferenceCase> {
        if workload.processes().iter().any(|p| !p.arrival.is_zero()) {
            return None;
        }
        let mut bursts: Vec<Ticks> = workload.processes().iter().map(|p| p.burst).collect();
        bursts.sort();
        CASES.iter().find(|case| {
            let mut expected: Vec<Ticks> = case.bursts.iter().map(|&b| Ticks::from_units(b)).collect();
            expected.sort();
            expected == bursts
        })
    }

    pub fn workload(&self) -> Workload {
        Workload::from_bursts(self.bursts.iter().map(|&b| Ticks::from_units(b)))
            .expect("reference bursts are positive")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Reproduced,
    Discrepancy,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Footnote {
    pub case: usize,
    pub column: String,
    pub row: &'static str,
    pub published: String,
    pub computed: String,
    pub verdict: Verdict,
    pub remark: Option<String>,
}

impl fmt::Display for Footnote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.verdict {
            Verdict::Reproduced => "reproduced",
            Verdict::Discrepancy => "discrepancy",
        };
        write!(
            f,
            "[{tag}] case {} {} {}: published {}, computed {}",
            self.case, self.column, self.row, self.published, self.computed
        )?;
        if let Some(remark) = &self.remark {
            write!(f, " ({remark})")?;
        }
        Ok(())
    }
}

fn average_note(case: usize, column: &str, row: &'static str, published: &str, computed: Mean) -> Footnote {
    let rounded = computed.format(1);
    let same = published.parse::<f64>().ok() == rounded.parse::<f64>().ok();
    Footnote {
        case,
        column: column.to_owned(),
        row,
        published: published.to_owned(),
        computed: format!("{} (rounds to {rounded})", computed.format(4)),
        verdict: if same {
            Verdict::Reproduced
        } else {
            Verdict::Discrepancy
        },
        remark: None,
    }
}

/// Compares one computed metrics set with a published column.
pub fn audit_column(
    case: &ReferenceCase,
    column: &PublishedColumn,
    metrics: &ScheduleMetrics,
) -> Vec<Footnote> {
    let label = format!("{} q={}", column.policy, column.quantum_label);
    let mut notes = vec![
        average_note(
            case.number,
            &label,
            "avg waiting",
            column.avg_waiting,
            metrics.avg_waiting,
        ),
        average_note(
            case.number,
            &label,
            "avg turnaround",
            column.avg_turnaround,
            metrics.avg_turnaround,
        ),
    ];

    // turnaround - waiting must equal the mean burst when all arrivals are 0
    let published_gap = column.avg_turnaround.parse::<f64>().unwrap_or(f64::NAN)
        - column.avg_waiting.parse::<f64>().unwrap_or(f64::NAN);
    let mean_burst = metrics.avg_burst.value();
    if (published_gap - mean_burst).abs() > 0.1 {
        notes[1].remark = Some(format!(
            "published turnaround - waiting = {published_gap:.1}, but mean burst is {mean_burst}"
        ));
    }

    let switches = column.context_switches;
    let convention = if switches == metrics.switch_count {
        "matches switch_count"
    } else if switches == metrics.dispatch_count {
        "matches dispatch_count"
    } else {
        "matches neither convention"
    };
    notes.push(Footnote {
        case: case.number,
        column: label,
        row: "context switches",
        published: switches.to_string(),
        computed: format!(
            "dispatch_count {}, switch_count {}",
            metrics.dispatch_count, metrics.switch_count
        ),
        verdict: if convention.starts_with("matches neither") {
            Verdict::Discrepancy
        } else {
            Verdict::Reproduced
        },
        remark: Some(convention.to_owned()),
    });
    notes
}

/// Footnotes for a comparison on a reference workload; empty otherwise.
///
/// The fixed-quantum run is audited against published RR columns with the
/// same quantum, the fuzzy run against the inferred-quantum column. Published
/// sorted-RR columns at a fixed quantum equal to the comparison's quantum
/// are recomputed and audited as well.
pub fn audit_comparison(workload: &Workload, comparison: &Comparison) -> Vec<Footnote> {
    let Some(case) = ReferenceCase::detect(workload) else {
        return Vec::new();
    };
    let fixed_q = comparison.fixed_quantum;
    let mut notes = Vec::new();
    for column in case.columns {
        match (column.policy, column.quantum) {
            (Policy::FixedRr, QuantumSource::Fixed(qs)) if qs.contains(&fixed_q.0) => {
                notes.extend(audit_column(case, column, &comparison.fixed.metrics));
            }
            (Policy::SortedRr, QuantumSource::Inferred) => {
                notes.extend(audit_column(case, column, &comparison.fuzzy.metrics));
            }
            (Policy::SortedRr, QuantumSource::Fixed(qs)) if qs.contains(&fixed_q.0) => {
                let q = fixed_q.as_f64();
                if let Ok(sorted) = rr_dynamic(workload, |_, _| Ok(q)) {
                    notes.extend(audit_column(case, column, &sorted.metrics));
                }
            }
            _ => {}
        }
    }
    notes
}

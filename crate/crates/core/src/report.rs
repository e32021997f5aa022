//! Plain-text and CSV rendering of schedules, comparisons and surfaces.

use std::fmt::Write as _;

use crate::lrrtq::SurfaceGrid;
use crate::reference::Footnote;
use crate::scheduler::{Comparison, Schedule, ScheduleMetrics};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
}

pub fn render_schedule(title: &str, schedule: &Schedule, format: Format) -> String {
    match format {
        Format::Table => schedule_table(title, schedule),
        Format::Csv => schedule_csv(schedule),
    }
}

fn quanta_lines(out: &mut String, metrics: &ScheduleMetrics) {
    for q in &metrics.quanta_used {
        let _ = writeln!(
            out,
            "quantum {} at t={} (queue {}, mean remaining burst {:.4})",
            q.quantum, q.at, q.queue_len, q.mean_remaining
        );
    }
}

fn schedule_table(title: &str, schedule: &Schedule) -> String {
    let m = &schedule.metrics;
    let mut out = format!("{title}\n");
    quanta_lines(&mut out, m);
    out.push('\n');
    let _ = writeln!(
        out,
        "{:<8} {:>10} {:>10} {:>11} {:>11} {:>10}",
        "pid", "arrival", "burst", "completion", "turnaround", "waiting"
    );
    for p in &m.processes {
        let _ = writeln!(
            out,
            "{:<8} {:>10} {:>10} {:>11} {:>11} {:>10}",
            p.pid,
            p.arrival.to_string(),
            p.burst.to_string(),
            p.completion.to_string(),
            p.turnaround.to_string(),
            p.waiting.to_string()
        );
    }
    out.push('\n');
    let _ = writeln!(out, "{:<24} {}", "average waiting", m.avg_waiting.format(4));
    let _ = writeln!(out, "{:<24} {}", "average turnaround", m.avg_turnaround.format(4));
    let _ = writeln!(out, "{:<24} {}", "dispatch_count", m.dispatch_count);
    let _ = writeln!(out, "{:<24} {}", "switch_count", m.switch_count);
    out
}

fn schedule_csv(schedule: &Schedule) -> String {
    let m = &schedule.metrics;
    let mut out = String::from("pid,arrival,burst,completion,turnaround,waiting\n");
    for p in &m.processes {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            p.pid, p.arrival, p.burst, p.completion, p.turnaround, p.waiting
        );
    }
    out.push_str("\nmetric,value\n");
    let _ = writeln!(out, "avg_waiting,{}", m.avg_waiting.format(4));
    let _ = writeln!(out, "avg_turnaround,{}", m.avg_turnaround.format(4));
    let _ = writeln!(out, "dispatch_count,{}", m.dispatch_count);
    let _ = writeln!(out, "switch_count,{}", m.switch_count);

    out.push_str("\nquantum_at,quantum,queue_len,mean_remaining_burst\n");
    for q in &m.quanta_used {
        let _ = writeln!(
            out,
            "{},{},{},{:.4}",
            q.at, q.quantum, q.queue_len, q.mean_remaining
        );
    }

    out.push_str("\nslice,pid,start,duration,end,reason\n");
    for (i, s) in schedule.trace.iter().enumerate() {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            i + 1,
            s.pid,
            s.start,
            s.duration,
            s.end(),
            s.reason
        );
    }
    out
}

struct Row {
    label: &'static str,
    fixed: String,
    fuzzy: String,
}

fn comparison_rows(c: &Comparison) -> Vec<Row> {
    let (f, z) = (&c.fixed.metrics, &c.fuzzy.metrics);
    vec![
        Row {
            label: "Average Waiting Time",
            fixed: f.avg_waiting.format(4),
            fuzzy: z.avg_waiting.format(4),
        },
        Row {
            label: "Average Turnaround Time",
            fixed: f.avg_turnaround.format(4),
            fuzzy: z.avg_turnaround.format(4),
        },
        Row {
            label: "Dispatch Count",
            fixed: f.dispatch_count.to_string(),
            fuzzy: z.dispatch_count.to_string(),
        },
        Row {
            label: "Switch Count",
            fixed: f.switch_count.to_string(),
            fuzzy: z.switch_count.to_string(),
        },
    ]
}

pub fn render_comparison(c: &Comparison, notes: &[Footnote], format: Format) -> String {
    let first = &c.fuzzy.metrics.quanta_used[0];
    let rows = comparison_rows(c);
    let mut out = String::new();
    match format {
        Format::Table => {
            let _ = writeln!(
                out,
                "inferred quantum {} (queue {}, mean burst {:.4})\n",
                c.inferred_quantum(),
                first.queue_len,
                first.mean_remaining
            );
            let fixed_head = format!("RR q={}", c.fixed_quantum);
            let fuzzy_head = format!("Fuzzy RR q={}", c.inferred_quantum());
            let _ = writeln!(out, "{:<26} {:>16} {:>18}", "", fixed_head, fuzzy_head);
            for r in &rows {
                let _ = writeln!(out, "{:<26} {:>16} {:>18}", r.label, r.fixed, r.fuzzy);
            }
            if c.fuzzy.metrics.quanta_used.len() > 1 {
                out.push('\n');
                quanta_lines(&mut out, &c.fuzzy.metrics);
            }
            if !notes.is_empty() {
                out.push_str("\nreference check:\n");
                for n in notes {
                    let _ = writeln!(out, "  {n}");
                }
            }
        }
        Format::Csv => {
            out.push_str("metric,fixed_rr,fuzzy_rr\n");
            let _ = writeln!(out, "quantum,{},{}", c.fixed_quantum, c.inferred_quantum());
            let keys = ["avg_waiting", "avg_turnaround", "dispatch_count", "switch_count"];
            for (key, r) in keys.iter().zip(&rows) {
                let _ = writeln!(out, "{key},{},{}", r.fixed, r.fuzzy);
            }
            if !notes.is_empty() {
                out.push_str("\ncase,column,row,published,computed,verdict,remark\n");
                for n in notes {
                    let verdict = match n.verdict {
                        crate::reference::Verdict::Reproduced => "reproduced",
                        crate::reference::Verdict::Discrepancy => "discrepancy",
                    };
                    let _ = writeln!(
                        out,
                        "{},{},{},{},\"{}\",{},\"{}\"",
                        n.case,
                        n.column,
                        n.row,
                        n.published,
                        n.computed,
                        verdict,
                        n.remark.as_deref().unwrap_or("")
                    );
                }
            }
        }
    }
    out
}

/// Header row is the second-input axis; the first column is the first-input
/// axis; cells have four decimals.
pub fn render_surface_csv(grid: &SurfaceGrid) -> String {
    let mut out = String::from("nop\\abt");
    for abt in &grid.abt_axis {
        let _ = write!(out, ",{abt:.4}");
    }
    out.push('\n');
    for (nop, row) in grid.nop_axis.iter().zip(&grid.values) {
        let _ = write!(out, "{nop:.4}");
        for v in row {
            let _ = write!(out, ",{v:.4}");
        }
        out.push('\n');
    }
    out
}

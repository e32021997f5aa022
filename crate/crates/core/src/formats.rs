//! Text formats: workload CSV and the line-oriented FIS definition.
//!
//! Workload CSV:
//!
//! ```text
//! pid,arrival,burst
//! P1,0,8
//! P2,0,5
//! ```
//!
//! FIS text (`#` starts a comment line):
//!
//! ```text
//! input LNOP 1 10
//! term fewer -2 0.5 1.5 4
//! output LOTmQm 1 5
//! term small 0 0.7 1.4 2.1
//! rule fewer => small 1
//! ```
//!
//! `term` lines attach to the most recent `input`/`output`. Rule antecedent
//! labels follow input declaration order; the weight defaults to 1. An
//! optional `samples <n>` line sets the defuzzification grid size.

use std::fmt::Write as _;

use thiserror::Error;

use crate::fuzzy::{
    FisDefinition, FuzzyError, FuzzyRule, LinguisticVariable, TrapezoidalMf, DEFAULT_SAMPLE_POINTS,
};
use crate::scheduler::{ProcessSpec, ScheduleError, Workload};
use crate::time::{TickParseError, Ticks};

pub const WORKLOAD_HEADER: &str = "pid,arrival,burst";

/// A parse failure tied to a 1-based line number (0 when not line-specific).
#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("expected header `{WORKLOAD_HEADER}`, found `{0}`")]
    BadHeader(String),
    #[error("expected 3 comma-separated fields, found {0}")]
    FieldCount(usize),
    #[error("empty pid")]
    EmptyPid,
    #[error("duplicate pid `{0}`")]
    DuplicatePid(String),
    #[error("negative arrival time `{0}`")]
    NegativeArrival(String),
    #[error("non-positive burst time `{0}`")]
    NonPositiveBurst(String),
    #[error("invalid {field}: {source}")]
    Number {
        field: &'static str,
        source: TickParseError,
    },
    #[error("no processes")]
    EmptyWorkload,
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("`{directive}` expects {expected} arguments, found {found}")]
    Arity {
        directive: &'static str,
        expected: &'static str,
        found: usize,
    },
    #[error("`{0}` is not a number")]
    BadNumber(String),
    #[error("`term` before any `input` or `output`")]
    OrphanTerm,
    #[error("variables must be declared before the first rule")]
    VariableAfterRules,
    #[error("more than one `output` declared")]
    SecondOutput,
    #[error("no `output` declared")]
    MissingOutput,
    #[error("rule is missing `=>`")]
    MissingArrow,
    #[error("rule names {found} antecedent terms but {expected} inputs are declared")]
    RuleArity { expected: usize, found: usize },
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Parses workload CSV. LF and CRLF line endings are accepted; blank lines
/// are skipped.
pub fn parse_workload(text: &str) -> Result<Workload, ParseError> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty());

    match lines.next() {
        Some((_, header)) if header.trim() == WORKLOAD_HEADER => {}
        Some((n, header)) => return Err(err(n, ParseErrorKind::BadHeader(header.to_owned()))),
        None => return Err(err(1, ParseErrorKind::BadHeader(String::new()))),
    }

    let mut processes: Vec<ProcessSpec> = Vec::new();
    for (n, line) in lines {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let [pid, arrival, burst] = fields[..] else {
            return Err(err(n, ParseErrorKind::FieldCount(fields.len())));
        };
        if pid.is_empty() {
            return Err(err(n, ParseErrorKind::EmptyPid));
        }
        if processes.iter().any(|p| p.pid == pid) {
            return Err(err(n, ParseErrorKind::DuplicatePid(pid.to_owned())));
        }
        let arrival = arrival.parse::<Ticks>().map_err(|e| match e {
            TickParseError::Negative(v) => err(n, ParseErrorKind::NegativeArrival(v)),
            source => err(
                n,
                ParseErrorKind::Number {
                    field: "arrival",
                    source,
                },
            ),
        })?;
        let burst_text = burst;
        let burst = burst.parse::<Ticks>().map_err(|e| match e {
            TickParseError::Negative(v) => err(n, ParseErrorKind::NonPositiveBurst(v)),
            source => err(
                n,
                ParseErrorKind::Number {
                    field: "burst",
                    source,
                },
            ),
        })?;
        if burst.is_zero() {
            return Err(err(n, ParseErrorKind::NonPositiveBurst(burst_text.to_owned())));
        }
        processes.push(ProcessSpec::new(pid, arrival, burst));
    }

    Workload::new(processes).map_err(|e| match e {
        ScheduleError::EmptyWorkload => err(0, ParseErrorKind::EmptyWorkload),
        other => unreachable!("rows are validated individually: {other}"),
    })
}

pub fn serialize_workload(workload: &Workload) -> String {
    let mut out = String::from(WORKLOAD_HEADER);
    out.push('\n');
    for p in workload.processes() {
        let _ = writeln!(out, "{},{},{}", p.pid, decimal(p.arrival), decimal(p.burst));
    }
    out
}

// Shortest exact decimal for a tick count: 8, 2.6, 0.0001.
fn decimal(t: Ticks) -> String {
    let s = t.to_string();
    let s = s.trim_end_matches('0');
    s.trim_end_matches('.').to_owned()
}

struct VarBuilder {
    line: usize,
    name: String,
    lo: f64,
    hi: f64,
    terms: Vec<(String, TrapezoidalMf)>,
}

impl VarBuilder {
    fn build(self) -> Result<LinguisticVariable, ParseError> {
        LinguisticVariable::new(self.name, self.lo, self.hi, self.terms).map_err(|e| err(self.line, e.into()))
    }
}

struct RuleLine {
    line: usize,
    antecedents: Vec<String>,
    consequent: String,
    weight: f64,
}

fn number(token: &str, line: usize) -> Result<f64, ParseError> {
    token
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| err(line, ParseErrorKind::BadNumber(token.to_owned())))
}

fn expect_args<'a>(
    directive: &'static str,
    expected: &'static str,
    args: &'a [&'a str],
    count: usize,
    line: usize,
) -> Result<&'a [&'a str], ParseError> {
    if args.len() == count {
        Ok(args)
    } else {
        Err(err(
            line,
            ParseErrorKind::Arity {
                directive,
                expected,
                found: args.len(),
            },
        ))
    }
}

pub fn parse_fis(text: &str) -> Result<FisDefinition, ParseError> {
    let mut inputs: Vec<VarBuilder> = Vec::new();
    let mut output: Option<VarBuilder> = None;
    // true while the most recent variable is the output
    let mut current_is_output = false;
    let mut rules: Vec<RuleLine> = Vec::new();
    let mut samples = DEFAULT_SAMPLE_POINTS;

    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let (directive, args) = (tokens[0], &tokens[1..]);
        match directive {
            "input" | "output" => {
                if !rules.is_empty() {
                    return Err(err(n, ParseErrorKind::VariableAfterRules));
                }
                let args = expect_args(
                    if directive == "input" { "input" } else { "output" },
                    "3 (name lo hi)",
                    args,
                    3,
                    n,
                )?;
                let var = VarBuilder {
                    line: n,
                    name: args[0].to_owned(),
                    lo: number(args[1], n)?,
                    hi: number(args[2], n)?,
                    terms: Vec::new(),
                };
                if directive == "input" {
                    inputs.push(var);
                    current_is_output = false;
                } else {
                    if output.is_some() {
                        return Err(err(n, ParseErrorKind::SecondOutput));
                    }
                    output = Some(var);
                    current_is_output = true;
                }
            }
            "term" => {
                if !rules.is_empty() {
                    return Err(err(n, ParseErrorKind::VariableAfterRules));
                }
                let args = expect_args("term", "5 (label p1 p2 p3 p4)", args, 5, n)?;
                let p = args[1..]
                    .iter()
                    .map(|t| number(t, n))
                    .collect::<Result<Vec<_>, _>>()?;
                let mf = TrapezoidalMf::new(p[0], p[1], p[2], p[3]).map_err(|e| err(n, e.into()))?;
                let target = if current_is_output {
                    output.as_mut()
                } else {
                    inputs.last_mut()
                };
                target
                    .ok_or_else(|| err(n, ParseErrorKind::OrphanTerm))?
                    .terms
                    .push((args[0].to_owned(), mf));
            }
            "rule" => {
                let arrow = args
                    .iter()
                    .position(|&t| t == "=>")
                    .ok_or_else(|| err(n, ParseErrorKind::MissingArrow))?;
                let (lhs, rhs) = (&args[..arrow], &args[arrow + 1..]);
                let (consequent, weight) = match rhs {
                    [label] => (label, 1.0),
                    [label, w] => (label, number(w, n)?),
                    _ => {
                        return Err(err(
                            n,
                            ParseErrorKind::Arity {
                                directive: "rule",
                                expected: "1 or 2 after `=>` (term [weight])",
                                found: rhs.len(),
                            },
                        ))
                    }
                };
                rules.push(RuleLine {
                    line: n,
                    antecedents: lhs.iter().map(|s| (*s).to_owned()).collect(),
                    consequent: (*consequent).to_owned(),
                    weight,
                });
            }
            "samples" => {
                let args = expect_args("samples", "1 (count)", args, 1, n)?;
                samples = args[0]
                    .parse()
                    .map_err(|_| err(n, ParseErrorKind::BadNumber(args[0].to_owned())))?;
            }
            other => return Err(err(n, ParseErrorKind::UnknownDirective(other.to_owned()))),
        }
    }

    let output = output
        .ok_or_else(|| err(0, ParseErrorKind::MissingOutput))?
        .build()?;
    let inputs = inputs
        .into_iter()
        .map(VarBuilder::build)
        .collect::<Result<Vec<_>, _>>()?;

    // Validate rules one at a time so errors carry their own line.
    let mut built = Vec::with_capacity(rules.len());
    for rule in rules {
        if rule.antecedents.len() != inputs.len() {
            return Err(err(
                rule.line,
                ParseErrorKind::RuleArity {
                    expected: inputs.len(),
                    found: rule.antecedents.len(),
                },
            ));
        }
        let fuzzy_rule = FuzzyRule::new(
            inputs
                .iter()
                .map(LinguisticVariable::name)
                .zip(rule.antecedents.iter().map(String::as_str)),
            (output.name(), rule.consequent.as_str()),
            rule.weight,
        );
        FisDefinition::with_sample_points(inputs.clone(), output.clone(), vec![fuzzy_rule.clone()], samples)
            .map_err(|e| err(rule.line, e.into()))?;
        built.push(fuzzy_rule);
    }
    FisDefinition::with_sample_points(inputs, output, built, samples).map_err(|e| err(0, e.into()))
}

/// Writes `fis` in the text format. Rules whose antecedents do not cover
/// every input in declaration order cannot be expressed and are rejected.
pub fn serialize_fis(fis: &FisDefinition) -> Result<String, FuzzyError> {
    let mut out = String::new();
    let write_var = |out: &mut String, kind: &str, var: &LinguisticVariable| {
        let (lo, hi) = var.range();
        let _ = writeln!(out, "{kind} {} {lo} {hi}", var.name());
        for term in var.terms() {
            let [a, b, c, d] = term.mf.breakpoints();
            let _ = writeln!(out, "term {} {a} {b} {c} {d}", term.label);
        }
        out.push('\n');
    };
    for var in fis.inputs() {
        write_var(&mut out, "input", var);
    }
    write_var(&mut out, "output", fis.output());
    if fis.sample_points() != DEFAULT_SAMPLE_POINTS {
        let _ = writeln!(out, "samples {}\n", fis.sample_points());
    }
    for rule in fis.rules() {
        let positional = rule.antecedents.len() == fis.inputs().len()
            && rule
                .antecedents
                .iter()
                .zip(fis.inputs())
                .all(|((v, _), var)| v == var.name());
        if !positional {
            let name = rule
                .antecedents
                .first()
                .map(|(v, _)| v.clone())
                .unwrap_or_default();
            return Err(FuzzyError::UnknownVariable(name));
        }
        let labels: Vec<&str> = rule.antecedents.iter().map(|(_, l)| l.as_str()).collect();
        let _ = write!(out, "rule {} => {}", labels.join(" "), rule.consequent.1);
        if rule.weight != 1.0 {
            let _ = write!(out, " {}", rule.weight);
        }
        out.push('\n');
    }
    Ok(out)
}

//! The LRRTQ preset: number of ready processes and average burst time in,
//! round-robin time quantum out.

use crate::fuzzy::{FisDefinition, FuzzyError, FuzzyRule, LinguisticVariable, Result, TrapezoidalMf};

/// Number of processes in the ready queue.
pub const NOP: &str = "LNOP";
/// Average burst time of the ready queue.
pub const ABT: &str = "LABT";
/// Inferred time quantum.
pub const QUANTUM: &str = "LOTmQm";

/// The preset in the line-oriented FIS text format.
pub const LRRTQ_FIS: &str = include_str!("../data/lrrtq.fis");

const NOP_TERMS: [(&str, [f64; 4]); 3] = [
    ("fewer", [-2.0, 0.5, 1.5, 4.0]),
    ("ordinary", [3.0, 4.8, 5.5, 7.5]),
    ("more", [7.0, 9.0, 10.5, 12.0]),
];

const ABT_TERMS: [(&str, [f64; 4]); 3] = [
    ("small", [-4.0, 0.4, 1.5, 4.0]),
    ("average", [3.0, 5.5, 6.5, 9.0]),
    ("large", [7.5, 10.0, 11.0, 13.5]),
];

const QUANTUM_TERMS: [(&str, [f64; 4]); 3] = [
    ("small", [0.0, 0.7, 1.4, 2.1]),
    ("medium", [1.5, 2.2, 2.8, 3.8]),
    ("large", [3.5, 4.5, 5.0, 6.0]),
];

// (LNOP term, LABT term) => LOTmQm term
const RULES: [(&str, &str, &str); 9] = [
    ("fewer", "small", "small"),
    ("fewer", "average", "medium"),
    ("fewer", "large", "large"),
    ("ordinary", "small", "small"),
    ("ordinary", "average", "medium"),
    ("ordinary", "large", "medium"),
    ("more", "small", "small"),
    ("more", "average", "small"),
    ("more", "large", "medium"),
];

fn variable(name: &str, lo: f64, hi: f64, terms: &[(&str, [f64; 4])]) -> LinguisticVariable {
    let terms = terms.iter().map(|&(label, [a, b, c, d])| {
        (
            label,
            TrapezoidalMf::new(a, b, c, d).expect("preset breakpoints are ordered"),
        )
    });
    LinguisticVariable::new(name, lo, hi, terms).expect("preset variable is valid")
}

pub fn build_lrrtq() -> FisDefinition {
    let inputs = vec![
        variable(NOP, 1.0, 10.0, &NOP_TERMS),
        variable(ABT, 1.0, 12.0, &ABT_TERMS),
    ];
    let output = variable(QUANTUM, 1.0, 5.0, &QUANTUM_TERMS);
    let rules = RULES
        .iter()
        .map(|&(nop, abt, q)| FuzzyRule::new([(NOP, nop), (ABT, abt)], (QUANTUM, q), 1.0))
        .collect();
    FisDefinition::new(inputs, output, rules).expect("preset rule base is valid")
}

/// Inferred quantum for a ready queue of `nop` processes averaging `abt`.
pub fn quantum(fis: &FisDefinition, nop: f64, abt: f64) -> Result<f64> {
    fis.infer(&[(NOP, nop), (ABT, abt)])
}

/// Input/output surface of a two-input system on uniform axes.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceGrid {
    pub nop_axis: Vec<f64>,
    pub abt_axis: Vec<f64>,
    /// `values[i][j]` is the output at `(nop_axis[i], abt_axis[j])`.
    pub values: Vec<Vec<f64>>,
}

fn axis(var: &LinguisticVariable, steps: usize) -> Vec<f64> {
    let (lo, hi) = var.range();
    let last = steps - 1;
    (0..steps)
        .map(|i| {
            if i == last {
                hi
            } else {
                lo + (hi - lo) * i as f64 / last as f64
            }
        })
        .collect()
}

/// Evaluates the system on a `nop_steps x abt_steps` grid spanning both
/// input ranges inclusive. The first input is the row axis.
pub fn sample_surface(fis: &FisDefinition, nop_steps: usize, abt_steps: usize) -> Result<SurfaceGrid> {
    let [row_var, col_var] = fis.inputs() else {
        return Err(FuzzyError::InputArity {
            expected: 2,
            found: fis.inputs().len(),
        });
    };
    if let Some(&steps) = [nop_steps, abt_steps].iter().find(|&&s| s < 2) {
        return Err(FuzzyError::TooFewSteps(steps));
    }
    let nop_axis = axis(row_var, nop_steps);
    let abt_axis = axis(col_var, abt_steps);
    let values = nop_axis
        .iter()
        .map(|&r| {
            abt_axis
                .iter()
                .map(|&c| fis.infer(&[(row_var.name(), r), (col_var.name(), c)]))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SurfaceGrid {
        nop_axis,
        abt_axis,
        values,
    })
}

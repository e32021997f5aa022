//! Generic Mamdani fuzzy inference.
//!
//! Inputs are fuzzified through trapezoidal membership functions, rules are
//! fired with `AND = min` scaled by the rule weight, consequents are clipped
//! with min-implication and combined by max-aggregation over a uniform grid
//! spanning the output variable's declared range. The crisp output is the
//! discrete centroid of that grid.

use std::collections::HashSet;

use thiserror::Error;

/// Default number of abscissae used to materialize the aggregated output.
pub const DEFAULT_SAMPLE_POINTS: usize = 1001;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FuzzyError {
    #[error("breakpoints must be finite and ordered p1 <= p2 <= p3 <= p4, got [{0}, {1}, {2}, {3}]")]
    BreakpointOrder(f64, f64, f64, f64),
    #[error("variable `{name}` has an invalid range [{lo}, {hi}]")]
    InvalidRange { name: String, lo: f64, hi: f64 },
    #[error("variable `{0}` has no terms")]
    NoTerms(String),
    #[error("variable `{variable}` declares term `{label}` more than once")]
    DuplicateTerm { variable: String, label: String },
    #[error("input variable `{0}` declared more than once")]
    DuplicateInput(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{variable}` has no term `{label}`")]
    UnknownTerm { variable: String, label: String },
    #[error("rule {0} has no antecedents")]
    EmptyRule(usize),
    #[error("rule {rule} references input `{variable}` more than once")]
    RepeatedAntecedent { rule: usize, variable: String },
    #[error("rule {rule} has weight {weight}, expected a value in (0, 1]")]
    InvalidWeight { rule: usize, weight: f64 },
    #[error("sample_points must be at least 2, got {0}")]
    TooFewSamples(usize),
    #[error("no value supplied for input variable `{0}`")]
    MissingInput(String),
    #[error("value supplied for `{0}`, which is not an input variable")]
    UnexpectedInput(String),
    #[error("input `{0}` is not a finite number")]
    NonFiniteInput(String),
    #[error("no rule fired: aggregated output has zero area")]
    NoRuleFired,
    #[error("expected {expected} input variables, found {found}")]
    InputArity { expected: usize, found: usize },
    #[error("surface needs at least 2 steps per axis, got {0}")]
    TooFewSteps(usize),
}

pub type Result<T, E = FuzzyError> = std::result::Result<T, E>;

/// Trapezoid with feet at `p1`/`p4` and plateau shoulders at `p2`/`p3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapezoidalMf {
    points: [f64; 4],
}

impl TrapezoidalMf {
    pub fn new(p1: f64, p2: f64, p3: f64, p4: f64) -> Result<Self> {
        let points = [p1, p2, p3, p4];
        let ordered = points.iter().all(|p| p.is_finite()) && p1 <= p2 && p2 <= p3 && p3 <= p4;
        if !ordered {
            return Err(FuzzyError::BreakpointOrder(p1, p2, p3, p4));
        }
        Ok(Self { points })
    }

    /// Builds the shape from a core `[left, right]` plus left and right spreads.
    pub fn from_core_spreads(left: f64, right: f64, left_spread: f64, right_spread: f64) -> Result<Self> {
        Self::new(left - left_spread, left, right, right + right_spread)
    }

    pub fn breakpoints(&self) -> [f64; 4] {
        self.points
    }

    /// Degree of membership of `x`, always in `[0, 1]`.
    ///
    /// Vertical edges (`p1 == p2` or `p3 == p4`) take the plateau value at
    /// the shared point. NaN maps to 0.
    pub fn membership(&self, x: f64) -> f64 {
        let [p1, p2, p3, p4] = self.points;
        if (p2..=p3).contains(&x) {
            1.0
        } else if x.is_nan() || x <= p1 || x >= p4 {
            0.0
        } else if x < p2 {
            (x - p1) / (p2 - p1)
        } else {
            (p4 - x) / (p4 - p3)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub label: String,
    pub mf: TrapezoidalMf,
}

/// A named universe of discourse `[lo, hi]` partitioned into labelled terms.
#[derive(Debug, Clone, PartialEq)]
pub struct LinguisticVariable {
    name: String,
    lo: f64,
    hi: f64,
    terms: Vec<Term>,
}

impl LinguisticVariable {
    pub fn new<S, I, L>(name: S, lo: f64, hi: f64, terms: I) -> Result<Self>
    where
        S: Into<String>,
        I: IntoIterator<Item = (L, TrapezoidalMf)>,
        L: Into<String>,
    {
        let name = name.into();
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(FuzzyError::InvalidRange { name, lo, hi });
        }
        let terms: Vec<Term> = terms
            .into_iter()
            .map(|(label, mf)| Term {
                label: label.into(),
                mf,
            })
            .collect();
        if terms.is_empty() {
            return Err(FuzzyError::NoTerms(name));
        }
        let mut seen = HashSet::new();
        for term in &terms {
            if !seen.insert(term.label.as_str()) {
                return Err(FuzzyError::DuplicateTerm {
                    variable: name,
                    label: term.label.clone(),
                });
            }
        }
        Ok(Self { name, lo, hi, terms })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn range(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn term_index(&self, label: &str) -> Option<usize> {
        self.terms.iter().position(|t| t.label == label)
    }

    pub fn clamp(&self, x: f64) -> f64 {
        x.clamp(self.lo, self.hi)
    }

    /// Membership degree of the clamped value in every term, in term order.
    pub fn fuzzify(&self, x: f64) -> Vec<(&str, f64)> {
        let x = self.clamp(x);
        self.terms
            .iter()
            .map(|t| (t.label.as_str(), t.mf.membership(x)))
            .collect()
    }
}

/// `IF v1 is t1 AND v2 is t2 ... THEN out is t (weight)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyRule {
    pub antecedents: Vec<(String, String)>,
    pub consequent: (String, String),
    pub weight: f64,
}

impl FuzzyRule {
    pub fn new<A, V, L>(antecedents: A, consequent: (&str, &str), weight: f64) -> Self
    where
        A: IntoIterator<Item = (V, L)>,
        V: Into<String>,
        L: Into<String>,
    {
        Self {
            antecedents: antecedents
                .into_iter()
                .map(|(v, l)| (v.into(), l.into()))
                .collect(),
            consequent: (consequent.0.to_owned(), consequent.1.to_owned()),
            weight,
        }
    }
}

// Rule with names resolved to (input index, term index) pairs.
#[derive(Debug, Clone, PartialEq)]
struct CompiledRule {
    antecedents: Vec<(usize, usize)>,
    consequent: usize,
    weight: f64,
}

/// Validated Mamdani system: input variables, one output, weighted rules.
#[derive(Debug, Clone, PartialEq)]
pub struct FisDefinition {
    inputs: Vec<LinguisticVariable>,
    output: LinguisticVariable,
    rules: Vec<FuzzyRule>,
    compiled: Vec<CompiledRule>,
    sample_points: usize,
}

/// Firing strength of one rule.
#[derive(Debug, Clone, PartialEq)]
pub struct Activation {
    pub rule: usize,
    pub consequent: String,
    pub degree: f64,
}

/// Aggregated output fuzzy set sampled on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregatedOutput {
    pub grid: Vec<f64>,
    pub degrees: Vec<f64>,
}

impl FisDefinition {
    pub fn new(
        inputs: Vec<LinguisticVariable>,
        output: LinguisticVariable,
        rules: Vec<FuzzyRule>,
    ) -> Result<Self> {
        Self::with_sample_points(inputs, output, rules, DEFAULT_SAMPLE_POINTS)
    }

    pub fn with_sample_points(
        inputs: Vec<LinguisticVariable>,
        output: LinguisticVariable,
        rules: Vec<FuzzyRule>,
        sample_points: usize,
    ) -> Result<Self> {
        if sample_points < 2 {
            return Err(FuzzyError::TooFewSamples(sample_points));
        }
        let mut names = HashSet::new();
        for var in &inputs {
            if !names.insert(var.name()) {
                return Err(FuzzyError::DuplicateInput(var.name().to_owned()));
            }
        }
        let compiled = rules
            .iter()
            .enumerate()
            .map(|(i, rule)| compile_rule(i + 1, rule, &inputs, &output))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            inputs,
            output,
            rules,
            compiled,
            sample_points,
        })
    }

    pub fn inputs(&self) -> &[LinguisticVariable] {
        &self.inputs
    }

    pub fn output(&self) -> &LinguisticVariable {
        &self.output
    }

    pub fn rules(&self) -> &[FuzzyRule] {
        &self.rules
    }

    pub fn sample_points(&self) -> usize {
        self.sample_points
    }

    /// Same system with a different defuzzification grid size.
    pub fn resampled(&self, sample_points: usize) -> Result<Self> {
        if sample_points < 2 {
            return Err(FuzzyError::TooFewSamples(sample_points));
        }
        Ok(Self {
            sample_points,
            ..self.clone()
        })
    }

    /// Same system with its rules reordered (or a subset of them).
    pub fn with_rules(&self, rules: Vec<FuzzyRule>) -> Result<Self> {
        Self::with_sample_points(
            self.inputs.clone(),
            self.output.clone(),
            rules,
            self.sample_points,
        )
    }

    // Crisp inputs in declaration order, clamped to each variable's range.
    fn resolve_inputs(&self, inputs: &[(&str, f64)]) -> Result<Vec<f64>> {
        for (name, _) in inputs {
            if !self.inputs.iter().any(|v| v.name() == *name) {
                return Err(FuzzyError::UnexpectedInput((*name).to_owned()));
            }
        }
        self.inputs
            .iter()
            .map(|var| {
                let (_, x) = inputs
                    .iter()
                    .find(|(name, _)| *name == var.name())
                    .ok_or_else(|| FuzzyError::MissingInput(var.name().to_owned()))?;
                if x.is_finite() {
                    Ok(var.clamp(*x))
                } else {
                    Err(FuzzyError::NonFiniteInput(var.name().to_owned()))
                }
            })
            .collect()
    }

    /// One activation per rule, in rule order:
    /// `weight * min(antecedent degrees)`.
    pub fn fire_rules(&self, inputs: &[(&str, f64)]) -> Result<Vec<Activation>> {
        let crisp = self.resolve_inputs(inputs)?;
        Ok(self
            .compiled
            .iter()
            .enumerate()
            .map(|(i, rule)| {
                let strength = rule
                    .antecedents
                    .iter()
                    .map(|&(var, term)| self.inputs[var].terms[term].mf.membership(crisp[var]))
                    .fold(1.0_f64, f64::min);
                Activation {
                    rule: i,
                    consequent: self.output.terms[rule.consequent].label.clone(),
                    degree: rule.weight * strength,
                }
            })
            .collect())
    }

    pub fn grid(&self) -> Vec<f64> {
        let (lo, hi) = self.output.range();
        let last = self.sample_points - 1;
        let step = (hi - lo) / last as f64;
        (0..self.sample_points)
            .map(|i| if i == last { hi } else { lo + i as f64 * step })
            .collect()
    }

    /// Max over rules of the consequent clipped at the rule's activation.
    ///
    /// Activations whose consequent label is not an output term are ignored.
    pub fn aggregate(&self, activations: &[Activation]) -> AggregatedOutput {
        let clipped: Vec<(&TrapezoidalMf, f64)> = activations
            .iter()
            .filter(|a| a.degree > 0.0)
            .filter_map(|a| {
                self.output
                    .term_index(&a.consequent)
                    .map(|t| (&self.output.terms[t].mf, a.degree.min(1.0)))
            })
            .collect();
        let grid = self.grid();
        let degrees = grid
            .iter()
            .map(|&u| {
                clipped
                    .iter()
                    .map(|(mf, level)| level.min(mf.membership(u)))
                    .fold(0.0_f64, f64::max)
            })
            .collect();
        AggregatedOutput { grid, degrees }
    }

    pub fn infer(&self, inputs: &[(&str, f64)]) -> Result<f64> {
        let activations = self.fire_rules(inputs)?;
        defuzz_centroid(&self.aggregate(&activations))
    }
}

fn compile_rule(
    number: usize,
    rule: &FuzzyRule,
    inputs: &[LinguisticVariable],
    output: &LinguisticVariable,
) -> Result<CompiledRule> {
    if rule.antecedents.is_empty() {
        return Err(FuzzyError::EmptyRule(number));
    }
    if !(rule.weight > 0.0 && rule.weight <= 1.0) {
        return Err(FuzzyError::InvalidWeight {
            rule: number,
            weight: rule.weight,
        });
    }
    let mut used = HashSet::new();
    let antecedents = rule
        .antecedents
        .iter()
        .map(|(var_name, label)| {
            let var = inputs
                .iter()
                .position(|v| v.name() == var_name)
                .ok_or_else(|| FuzzyError::UnknownVariable(var_name.clone()))?;
            if !used.insert(var) {
                return Err(FuzzyError::RepeatedAntecedent {
                    rule: number,
                    variable: var_name.clone(),
                });
            }
            let term = inputs[var]
                .term_index(label)
                .ok_or_else(|| FuzzyError::UnknownTerm {
                    variable: var_name.clone(),
                    label: label.clone(),
                })?;
            Ok((var, term))
        })
        .collect::<Result<Vec<_>>>()?;
    let (out_name, out_label) = &rule.consequent;
    if out_name != output.name() {
        return Err(FuzzyError::UnknownVariable(out_name.clone()));
    }
    let consequent = output
        .term_index(out_label)
        .ok_or_else(|| FuzzyError::UnknownTerm {
            variable: out_name.clone(),
            label: out_label.clone(),
        })?;
    Ok(CompiledRule {
        antecedents,
        consequent,
        weight: rule.weight,
    })
}

/// Discrete centroid `sum(u * mu) / sum(mu)` over the grid.
pub fn defuzz_centroid(agg: &AggregatedOutput) -> Result<f64> {
    let (moment, area) = agg
        .grid
        .iter()
        .zip(&agg.degrees)
        .fold((0.0, 0.0), |(m, a), (&u, &mu)| (m + u * mu, a + mu));
    if area <= 0.0 {
        return Err(FuzzyError::NoRuleFired);
    }
    let (lo, hi) = match (agg.grid.first(), agg.grid.last()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => return Err(FuzzyError::NoRuleFired),
    };
    Ok((moment / area).clamp(lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trap(p: [f64; 4]) -> TrapezoidalMf {
        TrapezoidalMf::new(p[0], p[1], p[2], p[3]).unwrap()
    }

    fn approx(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn membership_plateau_flank_and_outside() {
        let fewer = trap([-2.0, 0.5, 1.5, 4.0]);
        assert_eq!(fewer.membership(1.0), 1.0);
        // oracle: (0 - (-2)) / (0.5 - (-2)) = 0.8
        approx(fewer.membership(0.0), 0.8, 1e-12);
        assert_eq!(fewer.membership(5.0), 0.0);
        assert_eq!(fewer.membership(4.0), 0.0);
        assert_eq!(fewer.membership(-2.0), 0.0);
        approx(fewer.membership(2.75), 0.5, 1e-12);
        assert_eq!(fewer.membership(f64::NAN), 0.0);
    }

    #[test]
    fn degenerate_edges_are_vertical() {
        let step = trap([1.0, 1.0, 2.0, 2.0]);
        assert_eq!(step.membership(1.0), 1.0);
        assert_eq!(step.membership(2.0), 1.0);
        assert_eq!(step.membership(0.999), 0.0);
        assert_eq!(step.membership(2.001), 0.0);
        let spike = trap([3.0, 3.0, 3.0, 3.0]);
        assert_eq!(spike.membership(3.0), 1.0);
        assert_eq!(spike.membership(3.1), 0.0);
    }

    #[test]
    fn rejects_unordered_breakpoints() {
        assert!(matches!(
            TrapezoidalMf::new(4.0, 3.0, 2.0, 1.0),
            Err(FuzzyError::BreakpointOrder(..))
        ));
        assert!(TrapezoidalMf::new(0.0, f64::NAN, 1.0, 2.0).is_err());
    }

    #[test]
    fn core_spread_form_maps_to_breakpoints() {
        let mf = TrapezoidalMf::from_core_spreads(0.5, 1.5, 2.5, 2.5).unwrap();
        assert_eq!(mf.breakpoints(), [-2.0, 0.5, 1.5, 4.0]);
    }

    #[test]
    fn variable_validation() {
        let mf = trap([0.0, 1.0, 2.0, 3.0]);
        assert!(matches!(
            LinguisticVariable::new("x", 2.0, 2.0, [("a", mf)]),
            Err(FuzzyError::InvalidRange { .. })
        ));
        assert!(matches!(
            LinguisticVariable::new("x", 0.0, 1.0, Vec::<(&str, _)>::new()),
            Err(FuzzyError::NoTerms(_))
        ));
        assert!(matches!(
            LinguisticVariable::new("x", 0.0, 1.0, [("a", mf), ("a", mf)]),
            Err(FuzzyError::DuplicateTerm { .. })
        ));
    }

    fn flat_fis(level_mf: [f64; 4]) -> FisDefinition {
        let input = LinguisticVariable::new("x", 0.0, 1.0, [("any", trap([-1.0, 0.0, 1.0, 2.0]))]).unwrap();
        let output = LinguisticVariable::new("y", 1.0, 5.0, [("out", trap(level_mf))]).unwrap();
        FisDefinition::new(
            vec![input],
            output,
            vec![FuzzyRule::new([("x", "any")], ("y", "out"), 1.0)],
        )
        .unwrap()
    }

    #[test]
    fn aggregate_all_zero_and_full_plateau() {
        let fis = flat_fis([0.0, 1.0, 5.0, 6.0]);
        let zero = fis.aggregate(&[Activation {
            rule: 0,
            consequent: "out".into(),
            degree: 0.0,
        }]);
        assert!(zero.degrees.iter().all(|&d| d == 0.0));
        assert_eq!(defuzz_centroid(&zero), Err(FuzzyError::NoRuleFired));

        let full = fis.aggregate(&fis.fire_rules(&[("x", 0.5)]).unwrap());
        assert_eq!(full.grid.len(), DEFAULT_SAMPLE_POINTS);
        assert_eq!(full.grid[0], 1.0);
        assert_eq!(*full.grid.last().unwrap(), 5.0);
        assert!(full.degrees.iter().all(|&d| d == 1.0));
        approx(defuzz_centroid(&full).unwrap(), 3.0, 1e-12);
    }

    #[test]
    fn centroid_of_symmetric_shapes() {
        let grid: Vec<f64> = (0..=400).map(|i| 1.0 + i as f64 * 0.01).collect();
        let constant = AggregatedOutput {
            degrees: vec![0.5; grid.len()],
            grid: grid.clone(),
        };
        approx(defuzz_centroid(&constant).unwrap(), 3.0, 1e-12);

        let tri = trap([1.0, 2.5, 2.5, 4.0]);
        let grid: Vec<f64> = (0..=300).map(|i| 1.0 + i as f64 * 0.01).collect();
        let triangle = AggregatedOutput {
            degrees: grid.iter().map(|&u| tri.membership(u)).collect(),
            grid,
        };
        approx(defuzz_centroid(&triangle).unwrap(), 2.5, 1e-9);
    }

    #[test]
    fn weight_scales_activation() {
        let input = LinguisticVariable::new("x", 0.0, 1.0, [("any", trap([-1.0, 0.0, 1.0, 2.0]))]).unwrap();
        let output = LinguisticVariable::new("y", 0.0, 1.0, [("out", trap([0.0, 0.2, 0.8, 1.0]))]).unwrap();
        let fis = FisDefinition::new(
            vec![input],
            output,
            vec![FuzzyRule::new([("x", "any")], ("y", "out"), 0.25)],
        )
        .unwrap();
        let acts = fis.fire_rules(&[("x", 0.3)]).unwrap();
        assert_eq!(acts[0].degree, 0.25);
    }

    #[test]
    fn rule_validation_errors() {
        let input = LinguisticVariable::new("x", 0.0, 1.0, [("a", trap([0.0, 0.0, 1.0, 1.0]))]).unwrap();
        let output = LinguisticVariable::new("y", 0.0, 1.0, [("b", trap([0.0, 0.0, 1.0, 1.0]))]).unwrap();
        let build = |rule: FuzzyRule| FisDefinition::new(vec![input.clone()], output.clone(), vec![rule]);

        assert!(matches!(
            build(FuzzyRule::new([("z", "a")], ("y", "b"), 1.0)),
            Err(FuzzyError::UnknownVariable(_))
        ));
        assert!(matches!(
            build(FuzzyRule::new([("x", "q")], ("y", "b"), 1.0)),
            Err(FuzzyError::UnknownTerm { .. })
        ));
        assert!(matches!(
            build(FuzzyRule::new([("x", "a")], ("y", "q"), 1.0)),
            Err(FuzzyError::UnknownTerm { .. })
        ));
        assert!(matches!(
            build(FuzzyRule::new(Vec::<(&str, &str)>::new(), ("y", "b"), 1.0)),
            Err(FuzzyError::EmptyRule(1))
        ));
        assert!(matches!(
            build(FuzzyRule::new([("x", "a"), ("x", "a")], ("y", "b"), 1.0)),
            Err(FuzzyError::RepeatedAntecedent { .. })
        ));
        assert!(matches!(
            build(FuzzyRule::new([("x", "a")], ("y", "b"), 0.0)),
            Err(FuzzyError::InvalidWeight { .. })
        ));
        assert!(matches!(
            build(FuzzyRule::new([("x", "a")], ("y", "b"), 1.5)),
            Err(FuzzyError::InvalidWeight { .. })
        ));
        assert!(matches!(
            FisDefinition::with_sample_points(vec![input.clone()], output.clone(), vec![], 1),
            Err(FuzzyError::TooFewSamples(1))
        ));
        assert!(matches!(
            FisDefinition::new(vec![input.clone(), input.clone()], output.clone(), vec![]),
            Err(FuzzyError::DuplicateInput(_))
        ));
    }

    #[test]
    fn input_errors() {
        let fis = flat_fis([0.0, 1.0, 5.0, 6.0]);
        assert_eq!(fis.fire_rules(&[]), Err(FuzzyError::MissingInput("x".into())));
        assert_eq!(
            fis.fire_rules(&[("x", 0.5), ("w", 1.0)]),
            Err(FuzzyError::UnexpectedInput("w".into()))
        );
        assert_eq!(
            fis.fire_rules(&[("x", f64::INFINITY)]),
            Err(FuzzyError::NonFiniteInput("x".into()))
        );
    }
}

//! Fuzzy time-quantum selection for round-robin CPU scheduling.
//!
//! [`fuzzy`] is a small Mamdani inference engine (trapezoidal terms,
//! min/max operators, centroid output). [`lrrtq`] instantiates it as a
//! two-input quantum selector. [`scheduler`] simulates fixed-quantum round
//! robin and a sorted round robin that asks the fuzzy system for its quantum.
//! [`formats`], [`report`] and [`reference`] cover file I/O, rendering and the
//! audit against published reference cases.

pub mod formats;
pub mod fuzzy;
pub mod lrrtq;
pub mod reference;
pub mod report;
pub mod scheduler;
pub mod time;

pub use fuzzy::{
    defuzz_centroid, Activation, AggregatedOutput, FisDefinition, FuzzyError, FuzzyRule, LinguisticVariable,
    TrapezoidalMf,
};
pub use lrrtq::{build_lrrtq, sample_surface, SurfaceGrid};
pub use scheduler::{
    compare, compute_metrics, rr_dynamic, rr_fixed, rr_fuzzy, Comparison, ExecutionSlice, ProcessSpec,
    Schedule, ScheduleError, ScheduleMetrics, SliceEnd, Workload,
};
pub use time::{Mean, Ticks};

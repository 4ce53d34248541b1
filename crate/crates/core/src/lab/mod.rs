//! Filtration families, invariant series, linear fits, the radical probe and
//! the compliance report.

pub mod family;
pub mod fit;
pub mod golden;
pub mod probe;
pub mod theorems;

pub use family::{
    colon_stability, evaluate_series, family_member, generator_degrees, FamilyKind, FamilySpec,
    InvariantSeries, SeriesPoint,
};
pub use fit::{fit_eventual_linear, min_linear_combine, LinearLaw, DEFAULT_WINDOW};
pub use golden::{verify_golden, GoldenCheck};
pub use probe::{delta_probe, rees_probe, reduction_check, DeltaProbe, RadicalVerdict, ReesQuotient};
pub use theorems::{check_theorems, CheckOptions, ComplianceReport, TheoremItem, Verdict};

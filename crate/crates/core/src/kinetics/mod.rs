//! Fractional kinetic equations `N(t) = N0·f(t) − d^ν·₀D_t^{−ν} N(t)` with
//! k-Struve forcing: closed-form series solutions and a direct Volterra
//! solver to check them against.

mod adjudicate;
mod closed_form;
mod corollary;
mod oracle;
mod problem;

pub use adjudicate::{
    adjudicate, monotonicity, relative_deviation, Adjudication, DeviationSummary, Monotonicity, VariantReport,
    Verdict, INTERIOR_FRACTION, THREE_FIGURES,
};
pub use closed_form::{closed_form_at, solve_closed_form, SeriesSolution, Variant};
pub use corollary::solve_corollary_k1;
pub use oracle::{richardson, starting_exponents, volterra_oracle, OracleResult, MAX_STARTING_EXPONENTS};
pub use problem::{classical_decay, Forcing, KineticProblem};

//! Compares the closed-form variants against the direct Volterra solve.

use super::closed_form::{solve_closed_form, SeriesSolution, Variant};
use super::oracle::{volterra_oracle, OracleResult};
use super::problem::KineticProblem;
use crate::error::Result;
use crate::specfun::TruncationPolicy;
use crate::transforms::TimeGrid;

/// Nodes with `t < INTERIOR_FRACTION·t_max` are left out of the interior
/// maximum; the oracle's start-up layer lives there.
pub const INTERIOR_FRACTION: f64 = 0.1;

/// Relative change that counts as "stable to three significant figures".
pub const THREE_FIGURES: f64 = 5e-4;

/// `|x − reference| / |reference|`, falling back to the absolute gap when the
/// reference is zero.
pub fn relative_deviation(x: f64, reference: f64) -> f64 {
    let gap = (x - reference).abs();
    if reference == 0.0 {
        gap
    } else {
        gap / reference.abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviationSummary {
    /// Max relative deviation over nodes with `t ≥ 0.1·t_max`.
    pub max_interior: f64,
    /// Relative deviation at `t_max`.
    pub at_t_max: f64,
}

fn deviation_summary(grid: &TimeGrid, values: &[f64], reference: &[f64]) -> DeviationSummary {
    let cut = INTERIOR_FRACTION * grid.t_max();
    let max_interior = grid
        .points()
        .zip(values.iter().zip(reference))
        .filter(|(t, _)| *t >= cut)
        .map(|(_, (v, r))| relative_deviation(*v, *r))
        .fold(0.0, f64::max);
    let at_t_max = relative_deviation(*values.last().expect("non-empty grid"), *reference.last().expect("non-empty grid"));
    DeviationSummary { max_interior, at_t_max }
}

/// Deviation of one closed-form variant from the oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct VariantReport {
    pub variant: Variant,
    pub solution: SeriesSolution,
    /// Against the oracle on the requested grid.
    pub deviation: DeviationSummary,
    /// Against the oracle on the refined grid (same nodes).
    pub deviation_refined: DeviationSummary,
    /// Deviation at `t_max` is at most `tol`.
    pub agrees: bool,
    /// The deviation is either reproducible to three significant figures
    /// under grid doubling, or no larger than the oracle's own grid error.
    pub resolved: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Both,
    PrintedOnly,
    ConsistentOnly,
    Neither,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Both => "both",
            Verdict::PrintedOnly => "printed",
            Verdict::ConsistentOnly => "consistent",
            Verdict::Neither => "neither",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Adjudication {
    pub problem: KineticProblem,
    pub tol: f64,
    pub oracle: OracleResult,
    /// Oracle on the same interval with twice the points.
    pub oracle_refined: OracleResult,
    /// Max relative change of the oracle between the two grids (interior nodes).
    pub oracle_change: f64,
    pub reports: Vec<VariantReport>,
    pub verdict: Verdict,
}

impl Adjudication {
    pub fn report(&self, variant: Variant) -> &VariantReport {
        self.reports
            .iter()
            .find(|r| r.variant == variant)
            .expect("both variants are always reported")
    }

    /// The oracle is grid-doubling stable to three significant figures and
    /// every deviation figure is resolved.
    pub fn convergence_verified(&self) -> bool {
        self.oracle_change <= THREE_FIGURES && self.reports.iter().all(|r| r.resolved)
    }

    /// The oracle restricted to the nodes shared with the coarse grid.
    pub fn oracle_refined_on_grid(&self) -> Vec<f64> {
        coarse_nodes(&self.oracle_refined.values)
    }
}

fn coarse_nodes(fine: &[f64]) -> Vec<f64> {
    fine.iter().skip(1).step_by(2).copied().collect()
}

/// Runs the oracle on `grid` and on its refinement, evaluates both closed
/// forms, and reports how far each lies from the oracle.
pub fn adjudicate(p: &KineticProblem, grid: &TimeGrid, pol: &TruncationPolicy, tol: f64) -> Result<Adjudication> {
    let oracle = volterra_oracle(p, grid)?;
    let oracle_refined = volterra_oracle(p, &grid.refined())?;
    let refined_here = coarse_nodes(&oracle_refined.values);
    let change = deviation_summary(grid, &oracle.values, &refined_here);
    let oracle_change = change.max_interior.max(change.at_t_max);

    let mut reports = Vec::with_capacity(2);
    for variant in Variant::ALL {
        let solution = solve_closed_form(p, grid, variant, pol)?;
        let deviation = deviation_summary(grid, &solution.values, &oracle.values);
        let deviation_refined = deviation_summary(grid, &solution.values, &refined_here);
        let agrees = deviation.at_t_max <= tol;
        let settled = |a: f64, b: f64| relative_deviation(a, b) <= THREE_FIGURES;
        let sig_fig_stable = settled(deviation.max_interior, deviation_refined.max_interior)
            && settled(deviation.at_t_max, deviation_refined.at_t_max);
        let at_grid_level = deviation_refined.max_interior <= 2.0 * oracle_change;
        reports.push(VariantReport {
            variant,
            solution,
            deviation,
            deviation_refined,
            agrees,
            resolved: sig_fig_stable || at_grid_level,
        });
    }
    let verdict = match (reports[0].agrees, reports[1].agrees) {
        (true, true) => Verdict::Both,
        (true, false) => Verdict::PrintedOnly,
        (false, true) => Verdict::ConsistentOnly,
        (false, false) => Verdict::Neither,
    };
    Ok(Adjudication {
        problem: *p,
        tol,
        oracle,
        oracle_refined,
        oracle_change,
        reports,
        verdict,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    Constant,
    Neither,
}

impl Monotonicity {
    pub fn name(&self) -> &'static str {
        match self {
            Monotonicity::Increasing => "increasing",
            Monotonicity::Decreasing => "decreasing",
            Monotonicity::Constant => "constant",
            Monotonicity::Neither => "non-monotone",
        }
    }
}

/// Shape of a sampled curve (non-strict monotonicity).
pub fn monotonicity(values: &[f64]) -> Monotonicity {
    let up = values.windows(2).all(|w| w[1] >= w[0]);
    let down = values.windows(2).all(|w| w[1] <= w[0]);
    match (up, down) {
        (true, true) => Monotonicity::Constant,
        (true, false) => Monotonicity::Increasing,
        (false, true) => Monotonicity::Decreasing,
        (false, false) => Monotonicity::Neither,
    }
}

//! Direct product-integration solver for
//! `N(t) = N0·f(t) − d^ν·₀D_t^{−ν} N(t)`.
//!
//! The unknown is treated as piecewise linear, so each node satisfies
//!
//! ```text
//! N_i (1 + d^ν w_ii) = N0 f_i − d^ν Σ_{j<i} w_ij N_j − d^ν Σ_{j≤s} W_ij N_j
//! ```
//!
//! with the product-trapezoid weights `w` of [`ProductTrapezoid`] and the
//! starting weights `W` of [`StartingWeights`]. The solution behaves like a
//! sum of powers `t^(σ + jν)` near the origin; the starting weights make the
//! rule exact on those powers below 2, which restores second order at the
//! first nodes. The first `s` nodes are solved together, the rest causally,
//! in `O(n²)` overall.

use super::problem::{Forcing, KineticProblem};
use crate::error::{domain, Error, Result};
use crate::specfun::TruncationPolicy;
use crate::transforms::{Lu, ProductTrapezoid, StartingWeights, TimeGrid};

/// Upper bound on the number of starting exponents.
pub const MAX_STARTING_EXPONENTS: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub grid: TimeGrid,
    pub values: Vec<f64>,
    /// `N` at `t = 0` (equal to `N0·f(0)`), not part of `values`.
    pub origin: f64,
    /// `max_i |N_i − N0 f_i + d^ν (I^ν N)_i|`, recomputed after the solve.
    pub residual_norm: f64,
    pub grid_spacing: f64,
    /// Exponents handled by the starting weights.
    pub starting_exponents: Vec<f64>,
}

/// Forcing samples are summed with this policy, well past the point where
/// the k-Struve series has settled for `t ≤ 1`.
fn forcing_policy() -> TruncationPolicy {
    TruncationPolicy::default().with_max_terms(400)
}

/// Non-integer exponents below 2 in the small-`t` expansion of `N`.
///
/// The forcing contributes `t^σ` with `σ = ν(μ/k + 1 + 2r)` (or `σ = 0`
/// when constant) and each application of `I^ν` adds `ν`.
pub fn starting_exponents(p: &KineticProblem) -> Vec<f64> {
    let nu = p.nu;
    let mut seeds = vec![0.0];
    if p.forcing != Forcing::Constant {
        let lead = p.mu / p.k + 1.0;
        seeds = (0..)
            .map(|r| nu * (lead + 2.0 * r as f64))
            .take_while(|s| *s < 2.0)
            .collect();
    }
    let mut out: Vec<f64> = Vec::new();
    for s in seeds {
        let mut e = s;
        while e < 2.0 {
            let integral = (e - e.round()).abs() < 1e-9;
            if e > 0.0 && !integral && !out.iter().any(|x| (x - e).abs() < 1e-9) {
                out.push(e);
            }
            e += nu;
        }
    }
    out.sort_by(f64::total_cmp);
    out.truncate(MAX_STARTING_EXPONENTS);
    out
}

pub fn volterra_oracle(p: &KineticProblem, grid: &TimeGrid) -> Result<OracleResult> {
    p.validate()?;
    let pol = forcing_policy();
    let forcing: Vec<f64> = grid
        .points()
        .map(|t| p.forcing_at(t, &pol).map(|f| p.n0 * f))
        .collect::<Result<_>>()?;
    if let Some(bad) = forcing.iter().find(|v| !v.is_finite()) {
        return domain(format!("forcing is not finite on the grid ({bad})"));
    }
    let origin = p.n0 * p.forcing_at_origin()?;
    let n = grid.len();
    let trap = ProductTrapezoid::new(p.nu, grid.spacing(), n)?;
    let mut exponents = starting_exponents(p);
    if exponents.len() + 2 > n {
        exponents.clear();
    }
    let start = StartingWeights::new(&trap, &exponents)?;
    let s = start.len();
    let rate = p.d.powf(p.nu);

    // coupled block for nodes 1..=s
    let mut block = vec![0.0; s * s];
    let mut rhs = Vec::with_capacity(s);
    for i in 1..=s {
        for j in 1..=s {
            let mut w = start.row(i)[j - 1];
            if j <= i {
                w += trap.weight(i, j);
            }
            block[(i - 1) * s + (j - 1)] = (i == j) as u8 as f64 + rate * w;
        }
        rhs.push(forcing[i - 1] - rate * trap.origin_weight(i) * origin);
    }
    let mut values = if s > 0 { Lu::factor(block, s)?.solve(&rhs) } else { Vec::new() };
    values.reserve(n - s);

    let pivot = 1.0 + rate * trap.diagonal();
    if !(pivot > 0.0) {
        return Err(Error::Solver(format!("non-positive pivot {pivot}")));
    }
    for i in s + 1..=n {
        let history = trap.history(i, origin, &values) + start.correction(i, &values[..s]);
        values.push((forcing[i - 1] - rate * history) / pivot);
    }
    if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::Solver(format!("non-finite value {bad} in the solve")));
    }

    let integral = trap.apply(origin, &values);
    let residual_norm = values
        .iter()
        .zip(&forcing)
        .zip(&integral)
        .enumerate()
        .map(|(i, ((v, f), int))| (v - f + rate * (int + start.correction(i + 1, &values[..s]))).abs())
        .fold(0.0, f64::max);
    Ok(OracleResult {
        grid: *grid,
        values,
        origin,
        residual_norm,
        grid_spacing: grid.spacing(),
        starting_exponents: exponents,
    })
}

/// Richardson extrapolation `(4·fine − coarse)/3` on the coarse nodes, for
/// a second-order scheme. `fine` must be the refined grid of `coarse`.
pub fn richardson(coarse: &OracleResult, fine: &OracleResult) -> Result<Vec<f64>> {
    if fine.grid != coarse.grid.refined() {
        return domain("richardson needs the refined grid of the coarse solve");
    }
    Ok(coarse
        .values
        .iter()
        .enumerate()
        .map(|(i, c)| (4.0 * fine.values[2 * i + 1] - c) / 3.0)
        .collect())
}

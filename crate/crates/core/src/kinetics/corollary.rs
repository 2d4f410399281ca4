//! The k = 1 (classical Struve) solution formulas, evaluated on their own
//! code path so they can be checked against the general-k evaluator.

use super::closed_form::{at_node, SeriesSolution, Variant};
use super::problem::{Forcing, KineticProblem};
use crate::error::{domain, Result};
use crate::specfun::{log_gamma, mittag_leffler, NeumaierSum, TruncationPolicy};
use crate::transforms::TimeGrid;

fn corollary_at(p: &KineticProblem, t: f64, pol: &TruncationPolicy) -> Result<(f64, usize, bool)> {
    let nu = p.nu;
    let base = match p.forcing {
        Forcing::Thm1 | Forcing::Thm2 => p.d.powf(nu) * t.powf(nu) / 2.0,
        Forcing::Thm3 => t / 2.0,
        Forcing::Constant => return domain("the classical-Struve formulas need a Struve forcing"),
    };
    let rate = match p.forcing {
        Forcing::Thm2 => p.a.powf(nu) * t.powf(nu),
        _ => p.d.powf(nu) * t.powf(nu),
    };
    let mut acc = NeumaierSum::new();
    let mut all_converged = true;
    for r in 0..pol.max_terms {
        let rf = r as f64;
        let m = 2.0 * rf + p.mu + 1.0;
        let ln_ratio = log_gamma(nu * m + 1.0)? - log_gamma(rf + p.mu + 1.5)? - log_gamma(rf + 1.5)?;
        let ln_mag = ln_ratio + m * base.ln() + if r == 0 { 0.0 } else { rf * p.c.abs().ln() };
        let c_pow = if p.c < 0.0 || r % 2 == 0 { 1.0 } else { -1.0 };
        let ml = mittag_leffler(nu, nu * (2.0 * rf + p.mu) + 1.0, -rate, pol)?;
        all_converged &= ml.converged;
        let term = c_pow * ln_mag.exp() / t * ml.value;
        acc.add(term);
        let partial = acc.value();
        if (p.c == 0.0 && r == 0) || (partial != 0.0 && term.abs() <= pol.rel_tol * partial.abs()) {
            return Ok((p.n0 * partial, r + 1, all_converged));
        }
    }
    Ok((p.n0 * acc.value(), pol.max_terms, false))
}

/// The classical-Struve (`k = 1`) closed forms for the three Struve
/// forcings, exactly as published.
pub fn solve_corollary_k1(p: &KineticProblem, grid: &TimeGrid, pol: &TruncationPolicy) -> Result<SeriesSolution> {
    p.validate()?;
    pol.validate()?;
    if p.k != 1.0 {
        return domain(format!("the classical-Struve formulas need k = 1, got k = {}", p.k));
    }
    let mut values = Vec::with_capacity(grid.len());
    let mut terms_used = Vec::with_capacity(grid.len());
    let mut truncation_flag = Vec::with_capacity(grid.len());
    for t in grid.points() {
        let (v, n, ok) = corollary_at(p, t, pol).map_err(|e| at_node(e, t))?;
        values.push(v);
        terms_used.push(n);
        truncation_flag.push(!ok);
    }
    Ok(SeriesSolution {
        grid: *grid,
        values,
        variant: Variant::AsPrinted,
        terms_used,
        truncation_flag,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn requires_unit_k() {
        let g = TimeGrid::new(1.0, 4).unwrap();
        let pol = TruncationPolicy::default();
        let p = KineticProblem { k: 2.0, ..Default::default() };
        assert!(solve_corollary_k1(&p, &g, &pol).is_err());
        let c = KineticProblem {
            forcing: Forcing::Constant,
            ..Default::default()
        };
        assert!(solve_corollary_k1(&c, &g, &pol).is_err());
    }

    #[test]
    fn vanishes_at_the_origin() {
        // leading power t^{ν(μ+1)−1} with μ = 1, ν = 1 is t
        let pol = TruncationPolicy::default();
        let p = KineticProblem::default();
        let g = TimeGrid::new(1e-6, 1).unwrap();
        let v = solve_corollary_k1(&p, &g, &pol).unwrap().values[0];
        assert!(v.abs() < 1e-5, "{v}");
    }
}

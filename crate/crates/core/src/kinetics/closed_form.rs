//! Series solutions of the kinetic equation with k-Struve forcing.
//!
//! Both variants share the outer k-Struve sum
//!
//! ```text
//! N(t) = N0 Σ_r (−c)^r Γ(ν e_r + 1) / [Γ_k(rk+μ+3k/2) Γ(r+3/2)] · P_r(t) · E_{ν,β_r}(−Y^ν t^ν),
//! e_r = 2r + μ/k + 1
//! ```
//!
//! and differ in how each Sumudu-domain power is mapped back to time:
//!
//! * `AsPrinted` keeps the published closed forms verbatim:
//!   `P_r = (X/2)^{e_r} / t`, `β_r = ν(e_r − 1) + 1`, with
//!   `(X, Y) = (d^ν t^ν, d)`, `(d^ν t^ν, a)`, `(t, d)` for thm1/thm2/thm3.
//! * `SumuduConsistent` inverts `u^m ↦ t^m/Γ(m+1)`:
//!   `P_r = (s^ν t^ν / 2)^{e_r}`, `β_r = ν e_r + 1`, `Y = d`, where `s` is the
//!   forcing scale (`d`, `a` or `1`).
//!
//! For constant forcing both variants reduce to `N0·E_ν(−d^ν t^ν)`.

use std::fmt;
use std::str::FromStr;

use super::problem::{Forcing, KineticProblem};
use crate::error::{domain, Error, Result};
use crate::specfun::{log_gamma, log_k_gamma, mittag_leffler, mittag_leffler_scaled, SeriesValue, Step, Summation, TruncationPolicy};
use crate::transforms::TimeGrid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    AsPrinted,
    SumuduConsistent,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::AsPrinted, Variant::SumuduConsistent];

    pub fn name(&self) -> &'static str {
        match self {
            Variant::AsPrinted => "printed",
            Variant::SumuduConsistent => "consistent",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "printed" | "as_printed" => Ok(Variant::AsPrinted),
            "consistent" | "sumudu_consistent" => Ok(Variant::SumuduConsistent),
            _ => domain(format!("unknown variant '{s}' (expected printed or consistent)")),
        }
    }
}

/// Closed-form samples on a grid, with per-node truncation diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSolution {
    pub grid: TimeGrid,
    pub values: Vec<f64>,
    pub variant: Variant,
    pub terms_used: Vec<usize>,
    /// `true` where the outer or any inner series hit `max_terms` first.
    pub truncation_flag: Vec<bool>,
}

impl SeriesSolution {
    pub fn any_truncated(&self) -> bool {
        self.truncation_flag.iter().any(|&f| f)
    }
}

/// Attach the failing node to a convergence error.
pub(crate) fn at_node(err: Error, t: f64) -> Error {
    match err {
        Error::Convergence {
            what,
            term,
            log_magnitude,
            guard,
        } => Error::Convergence {
            what: format!("{what} at t = {t}"),
            term,
            log_magnitude,
            guard,
        },
        other => other,
    }
}

/// One closed-form value `N(t)`, `t > 0`.
pub fn closed_form_at(p: &KineticProblem, t: f64, variant: Variant, pol: &TruncationPolicy) -> Result<SeriesValue> {
    p.validate()?;
    pol.validate()?;
    if !(t > 0.0) || !t.is_finite() {
        return domain(format!("closed forms are evaluated at t > 0, got t = {t}"));
    }
    let nu = p.nu;
    let ln_t = t.ln();
    let ln_decay = nu * (p.d * t).ln();
    if p.forcing == Forcing::Constant {
        let e = mittag_leffler(nu, 1.0, -ln_decay.exp(), pol)?;
        return Ok(SeriesValue {
            value: p.n0 * e.value,
            ..e
        });
    }

    let ln_2 = std::f64::consts::LN_2;
    let mu_k = p.mu / p.k;
    let ln_c = p.c.abs().ln();
    // log of the argument base X (power prefactor) and the Mittag-Leffler rate Y^ν t^ν
    let (ln_x, ln_rate) = match variant {
        Variant::AsPrinted => match p.forcing {
            Forcing::Thm1 => (ln_decay, ln_decay),
            Forcing::Thm2 => (ln_decay, nu * (p.a * t).ln()),
            Forcing::Thm3 => (ln_t, ln_decay),
            Forcing::Constant => unreachable!(),
        },
        Variant::SumuduConsistent => (nu * (p.forcing_scale() * t).ln(), ln_decay),
    };
    let z = -ln_rate.exp();

    let mut sum = Summation::new("kinetic closed form", pol);
    let mut inner_ok = true;
    for r in 0..pol.max_terms {
        if r > 0 && p.c == 0.0 {
            let v = sum.finish(true);
            return Ok(SeriesValue {
                value: p.n0 * v.value,
                converged: inner_ok,
                ..v
            });
        }
        let rf = r as f64;
        let e = 2.0 * rf + mu_k + 1.0;
        let sign = if p.c > 0.0 && r % 2 == 1 { -1.0 } else { 1.0 };
        let ln_c_r = if r == 0 { 0.0 } else { rf * ln_c };
        let ln_coef = ln_c_r + log_gamma(nu * e + 1.0)? - log_k_gamma(rf * p.k + p.mu + 1.5 * p.k, p.k)? - log_gamma(rf + 1.5)?;
        let (ln_power, beta) = match variant {
            Variant::AsPrinted => (e * (ln_x - ln_2) - ln_t, nu * (e - 1.0) + 1.0),
            Variant::SumuduConsistent => (e * (ln_x - ln_2), nu * e + 1.0),
        };
        let ml = mittag_leffler_scaled(nu, beta, z, ln_coef + ln_power, pol)?;
        inner_ok &= ml.converged;
        if sum.add_value(sign * ml.value) == Step::Done {
            let v = sum.finish(true);
            return Ok(SeriesValue {
                value: p.n0 * v.value,
                converged: inner_ok,
                ..v
            });
        }
    }
    let v = sum.finish(false);
    Ok(SeriesValue {
        value: p.n0 * v.value,
        ..v
    })
}

/// Samples `closed_form_at` over `grid`.
pub fn solve_closed_form(p: &KineticProblem, grid: &TimeGrid, variant: Variant, pol: &TruncationPolicy) -> Result<SeriesSolution> {
    p.validate()?;
    let mut values = Vec::with_capacity(grid.len());
    let mut terms_used = Vec::with_capacity(grid.len());
    let mut truncation_flag = Vec::with_capacity(grid.len());
    for t in grid.points() {
        let v = closed_form_at(p, t, variant, pol).map_err(|e| at_node(e, t))?;
        values.push(v.value);
        terms_used.push(v.terms_used);
        truncation_flag.push(!v.converged);
    }
    Ok(SeriesSolution {
        grid: *grid,
        values,
        variant,
        terms_used,
        truncation_flag,
    })
}

//! Classical Struve `H_p` and the k-Struve family `S^k_{ν,c}`.

use super::gamma::{log_gamma, log_k_gamma};
use super::series::{SeriesValue, Step, Summation, TruncationPolicy};
use crate::error::{domain, Result};

/// Parameters `(k, ν, c)` of the k-Struve function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KStruveParams {
    pub k: f64,
    pub nu: f64,
    pub c: f64,
}

impl KStruveParams {
    pub fn new(k: f64, nu: f64, c: f64) -> Result<Self> {
        let p = Self { k, nu, c };
        p.validate()?;
        Ok(p)
    }

    /// `k > 0` and `ν/k + 1 > −1/2` (equivalently `ν > −3k/2`).
    pub fn validate(&self) -> Result<()> {
        if !(self.k > 0.0) || !self.k.is_finite() {
            return domain(format!("k-Struve requires k > 0, got k = {}", self.k));
        }
        if !self.nu.is_finite() || !self.c.is_finite() {
            return domain("k-Struve parameters must be finite");
        }
        if !(self.nu / self.k + 1.0 > -0.5) {
            return domain(format!(
                "k-Struve requires nu > -3k/2, got nu = {}, k = {}",
                self.nu, self.k
            ));
        }
        Ok(())
    }

    /// Exponent of the leading power, `ν/k + 1`.
    pub fn leading_exponent(&self) -> f64 {
        self.nu / self.k + 1.0
    }
}

/// `e·ln|b|` with the convention `0·ln 0 = 0`.
pub(crate) fn ln_pow(ln_base: f64, exponent: f64) -> f64 {
    if exponent == 0.0 {
        0.0
    } else {
        exponent * ln_base
    }
}

/// Truncated series for `H_p(x) = Σ (−1)^r (x/2)^(2r+p+1) / [Γ(r+3/2) Γ(r+p+3/2)]`.
pub fn struve_h(p: f64, x: f64, pol: &TruncationPolicy) -> Result<SeriesValue> {
    if !p.is_finite() || !(p > -1.5) {
        return domain(format!("struve_h requires p > -3/2, got p = {p}"));
    }
    if !x.is_finite() {
        return domain("struve_h requires finite x");
    }
    pol.validate()?;
    let lead = p + 1.0;
    // For x < 0 the power (x/2)^(2r+p+1) is real only for integral p.
    let base_sign = if x < 0.0 {
        if p.fract() != 0.0 {
            return domain(format!(
                "struve_h: negative x = {x} needs integral p for a real power, got p = {p}"
            ));
        }
        if (lead as i64) % 2 == 0 { 1.0 } else { -1.0 }
    } else {
        1.0
    };
    if x == 0.0 {
        return zero_argument(lead, || {
            Ok(-(log_gamma(1.5)? + log_gamma(p + 1.5)?))
        });
    }
    let ln_half_x = (x.abs() / 2.0).ln();
    let mut sum = Summation::new("struve_h", pol);
    for r in 0..pol.max_terms {
        let rf = r as f64;
        let sign = if r % 2 == 0 { base_sign } else { -base_sign };
        let ln_mag = ln_pow(ln_half_x, 2.0 * rf + lead) - log_gamma(rf + 1.5)? - log_gamma(rf + p + 1.5)?;
        if sum.add_log(sign, ln_mag)? == Step::Done {
            return Ok(sum.finish(true));
        }
    }
    Ok(sum.finish(false))
}

/// Value at `x = 0`: zero for a positive leading exponent, the first
/// coefficient when it vanishes, a domain error when it is negative.
fn zero_argument(lead: f64, ln_first: impl FnOnce() -> Result<f64>) -> Result<SeriesValue> {
    let value = if lead > 0.0 {
        0.0
    } else if lead == 0.0 {
        ln_first()?.exp()
    } else {
        return domain(format!(
            "series is singular at x = 0 (leading exponent {lead} < 0)"
        ));
    };
    Ok(SeriesValue {
        value,
        terms_used: 1,
        converged: true,
    })
}

/// Truncated k-Struve series
/// `Σ (−c)^r (x/2)^(2r+ν/k+1) / [Γ_k(rk+ν+3k/2) Γ(r+3/2)]` for `x ≥ 0`.
pub fn k_struve(params: &KStruveParams, x: f64, pol: &TruncationPolicy) -> Result<SeriesValue> {
    params.validate()?;
    pol.validate()?;
    if !x.is_finite() || x < 0.0 {
        return domain(format!("k_struve requires finite x >= 0, got x = {x}"));
    }
    let KStruveParams { k, nu, c } = *params;
    let lead = params.leading_exponent();
    if x == 0.0 {
        return zero_argument(lead, || {
            Ok(-(log_k_gamma(nu + 1.5 * k, k)? + log_gamma(1.5)?))
        });
    }
    let ln_half_x = (x / 2.0).ln();
    let ln_c = c.abs().ln();
    let mut sum = Summation::new("k_struve", pol);
    for r in 0..pol.max_terms {
        let rf = r as f64;
        if r > 0 && c == 0.0 {
            return Ok(sum.finish(true));
        }
        // (−c)^r
        let sign = if c > 0.0 && r % 2 == 1 { -1.0 } else { 1.0 };
        let ln_mag = ln_pow(ln_c, rf) + ln_pow(ln_half_x, 2.0 * rf + lead)
            - log_k_gamma(rf * k + nu + 1.5 * k, k)?
            - log_gamma(rf + 1.5)?;
        if sum.add_log(sign, ln_mag)? == Step::Done {
            return Ok(sum.finish(true));
        }
    }
    Ok(sum.finish(false))
}

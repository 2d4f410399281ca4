//! Fox–Wright `pΨq` series.

use super::gamma::ln_gamma_signed;
use super::series::{SeriesValue, Step, Summation, TruncationPolicy};
use super::struve::ln_pow;
use crate::error::{domain, Result};

/// Parameter pairs `(a_i, A_i)` and `(b_j, B_j)` of
/// `Σ_n Π Γ(a_i + A_i n) / Π Γ(b_j + B_j n) · z^n / n!`.
#[derive(Debug, Clone, PartialEq)]
pub struct WrightParams {
    pub upper: Vec<(f64, f64)>,
    pub lower: Vec<(f64, f64)>,
}

impl WrightParams {
    pub fn new(upper: Vec<(f64, f64)>, lower: Vec<(f64, f64)>) -> Result<Self> {
        let w = Self { upper, lower };
        w.validate()?;
        Ok(w)
    }

    /// `1 + Σ B_j − Σ A_i`.
    pub fn excess(&self) -> f64 {
        1.0 + self.lower.iter().map(|p| p.1).sum::<f64>() - self.upper.iter().map(|p| p.1).sum::<f64>()
    }

    /// Radius of convergence `Π A_i^(−A_i) · Π B_j^(B_j)` when the excess is zero.
    pub fn radius(&self) -> f64 {
        let ln_r = self.lower.iter().map(|&(_, b)| b * b.ln()).sum::<f64>()
            - self.upper.iter().map(|&(_, a)| a * a.ln()).sum::<f64>();
        ln_r.exp()
    }

    pub fn validate(&self) -> Result<()> {
        for &(a, scale) in self.upper.iter().chain(self.lower.iter()) {
            if !a.is_finite() || !scale.is_finite() || !(scale > 0.0) {
                return domain(format!("Fox-Wright pair ({a}, {scale}) needs a finite shift and a positive scale"));
            }
        }
        if self.excess() < -EXCESS_TOL {
            return domain(format!(
                "Fox-Wright series diverges: 1 + sum(B) - sum(A) = {} < 0",
                self.excess()
            ));
        }
        Ok(())
    }

    fn check_argument(&self, z: f64) -> Result<()> {
        self.validate()?;
        if !z.is_finite() {
            return domain("Fox-Wright argument must be finite");
        }
        if self.excess() <= EXCESS_TOL {
            let rho = self.radius();
            if z.abs() > rho * (1.0 + 1e-12) {
                return domain(format!(
                    "Fox-Wright series with zero excess converges only for |z| <= {rho}, got z = {z}"
                ));
            }
        }
        Ok(())
    }
}

const EXCESS_TOL: f64 = 1e-12;

fn sum_fox_wright(w: &WrightParams, z: f64, pol: &TruncationPolicy, accelerate: bool) -> Result<SeriesValue> {
    w.check_argument(z)?;
    pol.validate()?;
    let ln_z = z.abs().ln();
    let mut sum = Summation::new("fox_wright", pol);
    if accelerate {
        sum = sum.recording();
    }
    let finish = |s: Summation, converged| {
        if accelerate {
            s.finish_accelerated(converged)
        } else {
            s.finish(converged)
        }
    };
    'terms: for n in 0..pol.max_terms {
        if n > 0 && z == 0.0 {
            return Ok(finish(sum, true));
        }
        let nf = n as f64;
        let mut ln_mag = ln_pow(ln_z, nf) - libm::lgamma(nf + 1.0);
        let mut sign = if z < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
        for &(a, scale) in &w.upper {
            match ln_gamma_signed(a + scale * nf) {
                Some((lg, s)) => {
                    ln_mag += lg;
                    sign *= s;
                }
                None => {
                    return domain(format!(
                        "Fox-Wright numerator Gamma has a pole at term {n} (a = {a}, A = {scale})"
                    ))
                }
            }
        }
        for &(b, scale) in &w.lower {
            match ln_gamma_signed(b + scale * nf) {
                Some((lg, s)) => {
                    ln_mag -= lg;
                    sign *= s;
                }
                None => {
                    sum.add_zero();
                    continue 'terms;
                }
            }
        }
        if sum.add_log(sign, ln_mag)? == Step::Done {
            return Ok(finish(sum, true));
        }
    }
    Ok(finish(sum, false))
}

/// Truncated Fox–Wright series.
///
/// Accepted parameter sets have `1 + ΣB − ΣA > 0` (entire), or a zero
/// excess with `|z|` inside the radius returned by [`WrightParams::radius`].
pub fn fox_wright(w: &WrightParams, z: f64, pol: &TruncationPolicy) -> Result<SeriesValue> {
    sum_fox_wright(w, z, pol, false)
}

/// As [`fox_wright`], but if `max_terms` runs out before the tolerance rule
/// fires the partial sums are extrapolated with Wynn's epsilon algorithm.
/// Meant for zero-excess series evaluated close to (or on) their radius.
pub fn fox_wright_accelerated(w: &WrightParams, z: f64, pol: &TruncationPolicy) -> Result<SeriesValue> {
    sum_fox_wright(w, z, pol, true)
}

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::specfun::{k_struve, log_gamma, log_k_gamma, KStruveParams, TruncationPolicy};

/// Which right-hand side drives `N(t) = N0·f(t) − d^ν·₀D_t^{−ν} N(t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Forcing {
    /// `f(t) = S^k_{μ,c}(d^ν t^ν)`
    Thm1,
    /// `f(t) = S^k_{μ,c}(a^ν t^ν)`, `a ≠ d`
    Thm2,
    /// `f(t) = S^k_{μ,c}(t^ν)`
    Thm3,
    /// `f(t) = 1`; the classical/Mittag-Leffler relaxation, used for validation.
    Constant,
}

impl Forcing {
    pub const ALL: [Forcing; 4] = [Forcing::Thm1, Forcing::Thm2, Forcing::Thm3, Forcing::Constant];

    pub fn name(&self) -> &'static str {
        match self {
            Forcing::Thm1 => "thm1",
            Forcing::Thm2 => "thm2",
            Forcing::Thm3 => "thm3",
            Forcing::Constant => "constant",
        }
    }
}

impl fmt::Display for Forcing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Forcing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Forcing::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown forcing '{s}' (expected thm1, thm2, thm3 or constant)")))
    }
}

/// A generalized fractional kinetic equation
/// `N(t) = N0·f(t) − d^ν·₀D_t^{−ν} N(t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KineticProblem {
    /// Initial number density.
    pub n0: f64,
    /// Decay parameter.
    pub d: f64,
    /// Forcing scale, used by [`Forcing::Thm2`] only.
    pub a: f64,
    /// Fractional order.
    pub nu: f64,
    /// Order of the k-Struve forcing.
    pub mu: f64,
    pub c: f64,
    pub k: f64,
    pub forcing: Forcing,
}

impl Default for KineticProblem {
    /// Every parameter 1, forcing `thm1`.
    fn default() -> Self {
        Self {
            n0: 1.0,
            d: 1.0,
            a: 1.0,
            nu: 1.0,
            mu: 1.0,
            c: 1.0,
            k: 1.0,
            forcing: Forcing::Thm1,
        }
    }
}

impl KineticProblem {
    pub fn validate(&self) -> Result<()> {
        let finite = [self.n0, self.d, self.a, self.nu, self.mu, self.c, self.k];
        if finite.iter().any(|v| !v.is_finite()) {
            return domain("kinetic problem parameters must be finite");
        }
        if !(self.n0 > 0.0) {
            return domain(format!("N0 must be > 0, got {}", self.n0));
        }
        if !(self.d > 0.0) {
            return domain(format!("d must be > 0, got {}", self.d));
        }
        if !(self.nu > 0.0) {
            return domain(format!("nu must be > 0, got {}", self.nu));
        }
        if !(self.k > 0.0) {
            return domain(format!("k must be > 0, got {}", self.k));
        }
        if !(self.mu > -1.5 * self.k) {
            return domain(format!("mu must exceed -3k/2 = {}, got {}", -1.5 * self.k, self.mu));
        }
        if self.forcing == Forcing::Thm2 {
            if !(self.a > 0.0) {
                return domain(format!("a must be > 0, got {}", self.a));
            }
            if self.a == self.d {
                return domain(format!("thm2 requires a != d, got a = d = {}", self.d));
            }
        }
        Ok(())
    }

    pub fn struve_params(&self) -> KStruveParams {
        KStruveParams {
            k: self.k,
            nu: self.mu,
            c: self.c,
        }
    }

    /// The constant `s` in the forcing argument `(s·t)^ν`.
    pub fn forcing_scale(&self) -> f64 {
        match self.forcing {
            Forcing::Thm1 | Forcing::Constant => self.d,
            Forcing::Thm2 => self.a,
            Forcing::Thm3 => 1.0,
        }
    }

    /// `f(t)` (without the `N0` factor).
    pub fn forcing_at(&self, t: f64, pol: &TruncationPolicy) -> Result<f64> {
        if self.forcing == Forcing::Constant {
            return Ok(1.0);
        }
        if t == 0.0 {
            return self.forcing_at_origin();
        }
        let arg = (self.forcing_scale() * t).powf(self.nu);
        Ok(k_struve(&self.struve_params(), arg, pol)?.value)
    }

    /// `lim_{t→0⁺} f(t)`; an error when the forcing is singular there.
    pub fn forcing_at_origin(&self) -> Result<f64> {
        if self.forcing == Forcing::Constant {
            return Ok(1.0);
        }
        let lead = self.mu / self.k + 1.0;
        if lead > 0.0 {
            Ok(0.0)
        } else if lead == 0.0 {
            Ok((-(log_k_gamma(self.mu + 1.5 * self.k, self.k)? + log_gamma(1.5)?)).exp())
        } else {
            domain(format!(
                "forcing is singular at t = 0 (mu/k + 1 = {lead} < 0); the grid solver needs a finite f(0)"
            ))
        }
    }

    /// `key=value` pairs describing the problem.
    pub fn describe(&self) -> String {
        format!(
            "forcing={} n0={} d={} a={} nu={} mu={} c={} k={}",
            self.forcing, self.n0, self.d, self.a, self.nu, self.mu, self.c, self.k
        )
    }
}

/// `N0·e^{−c t}`, the integer-order decay law.
pub fn classical_decay(n0: f64, c: f64, t: f64) -> f64 {
    n0 * (-c * t).exp()
}

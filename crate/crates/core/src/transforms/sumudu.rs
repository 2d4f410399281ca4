//! Sumudu transform `S[f](u) = ∫₀^∞ e^{−t} f(u·t) dt` and its rules.

use super::quadrature::QuadratureSpec;
use crate::error::{domain, Result};
use crate::specfun::{
    fox_wright, fox_wright_accelerated, ln_gamma_signed, log_gamma, KStruveParams, SeriesValue,
    TruncationPolicy, WrightParams,
};

fn check_u(u: f64) -> Result<()> {
    if !(u > 0.0) || !u.is_finite() {
        return domain(format!("Sumudu variable must be finite and > 0, got u = {u}"));
    }
    Ok(())
}

/// Quadrature approximation of `∫₀^∞ e^{−t} f(u·t) dt`.
pub fn sumudu_numeric<F>(f: F, u: f64, q: &QuadratureSpec) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    check_u(u)?;
    q.integrate_exp_weighted(|t| f(u * t))
}

/// Image of a power: `S{t^(μ−1)}(u) = u^(μ−1)·Γ(μ)`.
pub fn sumudu_power_rule(mu: f64, u: f64) -> Result<f64> {
    check_u(u)?;
    if !(mu > 0.0) || !mu.is_finite() {
        return domain(format!("power rule requires mu > 0, got {mu}"));
    }
    Ok(((mu - 1.0) * u.ln() + log_gamma(mu)?).exp())
}

/// Image of the fractional integral: `S{₀D_t^{−ν} f}(u) = u^ν·G(u)`.
pub fn sumudu_rl_rule(g_of_u: f64, u: f64, nu: f64) -> Result<f64> {
    check_u(u)?;
    if !(nu > 0.0) || !nu.is_finite() {
        return domain(format!("fractional order must be > 0, got {nu}"));
    }
    Ok(u.powf(nu) * g_of_u)
}

/// How a power `u^m` in the Sumudu domain is mapped back to the time domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseRule {
    /// `u^m ↦ t^m / Γ(m+1)`, the exact inverse of [`sumudu_power_rule`].
    Power,
    /// `u^m ↦ t^(m−1) / Γ(m)`, the rule the printed kinetic solutions use.
    Printed,
}

/// Inverse image of `u^m` under `rule`, for `m ≥ 0` and `t > 0`.
pub fn inverse_sumudu_power(m: f64, t: f64, rule: InverseRule) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return domain(format!("inverse power rule needs t > 0, got {t}"));
    }
    if !(m >= 0.0) || !m.is_finite() {
        return domain(format!("inverse power rule needs m >= 0, got {m}"));
    }
    let (exponent, gamma_arg) = match rule {
        InverseRule::Power => (m, m + 1.0),
        InverseRule::Printed => (m - 1.0, m),
    };
    Ok(match ln_gamma_signed(gamma_arg) {
        Some((lg, sign)) => sign * (exponent * t.ln() - lg).exp(),
        None => 0.0,
    })
}

fn kstruve_image_params(a: f64) -> Result<WrightParams> {
    WrightParams::new(vec![(a + 2.0, 2.0), (1.0, 1.0)], vec![(a + 1.5, 1.0), (1.5, 1.0)])
}

/// Closed-form Sumudu image of `S^k_{ν,c}(scale·t)`:
///
/// `G(v) = (v/2)^(ν/k+1) · k^(−1/2−ν/k) · ₂Ψ₂[(ν/k+2,2),(1,1); (ν/k+3/2,1),(3/2,1) | −c v²/(4k)]`
/// with `v = scale·u`.
///
/// The ₂Ψ₂ here has zero excess and radius 1/4, so the formula needs
/// `|c|·v² ≤ k`. Near the radius the partial sums are extrapolated.
pub fn sumudu_kstruve_closed(
    params: &KStruveParams,
    scale: f64,
    u: f64,
    pol: &TruncationPolicy,
) -> Result<SeriesValue> {
    params.validate()?;
    check_u(u)?;
    if !(scale > 0.0) || !scale.is_finite() {
        return domain(format!("forcing scale must be > 0, got {scale}"));
    }
    let v = scale * u;
    let a = params.nu / params.k;
    let w = kstruve_image_params(a)?;
    let z = -params.c * v * v / (4.0 * params.k);
    let psi = fox_wright_accelerated(&w, z, pol)?;
    let prefactor = ((a + 1.0) * (v / 2.0).ln() - (0.5 + a) * params.k.ln()).exp();
    Ok(SeriesValue {
        value: prefactor * psi.value,
        ..psi
    })
}

/// The inverse-Sumudu image of the k-Struve series, evaluated exactly as
/// the displayed ₁Ψ₃ expression:
///
/// `(t/2)^(ν/k) · k^(−1/2−ν/k) · ₁Ψ₃[(1,1); (ν/k+3/2,1),(3/2,1),(ν/k,2) | −c t²/(4k)]`.
///
/// The third lower pair does not match a term-by-term inversion of the
/// series (that would give `Γ(ν/k+1+2r)`); the function reproduces the
/// displayed formula and makes no claim that it inverts [`sumudu_kstruve_closed`].
pub fn inverse_sumudu_kstruve(params: &KStruveParams, t: f64, pol: &TruncationPolicy) -> Result<SeriesValue> {
    params.validate()?;
    if !(t >= 0.0) || !t.is_finite() {
        return domain(format!("inverse image needs finite t >= 0, got {t}"));
    }
    let a = params.nu / params.k;
    if t == 0.0 {
        if a < 0.0 {
            return domain(format!("inverse image is singular at t = 0 for nu/k = {a} < 0"));
        }
        return Ok(SeriesValue {
            value: 0.0,
            terms_used: 1,
            converged: true,
        });
    }
    let w = WrightParams::new(vec![(1.0, 1.0)], vec![(a + 1.5, 1.0), (1.5, 1.0), (a, 2.0)])?;
    let z = -params.c * t * t / (4.0 * params.k);
    let psi = fox_wright(&w, z, pol)?;
    let prefactor = (a * (t / 2.0).ln() - (0.5 + a) * params.k.ln()).exp();
    Ok(SeriesValue {
        value: prefactor * psi.value,
        ..psi
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn numeric_on_simple_functions() {
        let q = QuadratureSpec::default();
        for u in [0.1, 0.5, 2.0] {
            assert_relative_eq!(sumudu_numeric(|_| Ok(1.0), u, &q).unwrap(), 1.0, max_relative = 1e-12);
            assert_relative_eq!(sumudu_numeric(Ok, u, &q).unwrap(), u, max_relative = 1e-12);
        }
        assert_relative_eq!(sumudu_numeric(|t| Ok(t * t), 0.5, &q).unwrap(), 0.5, max_relative = 1e-12);
        assert!(sumudu_numeric(|_| Ok(1.0), 0.0, &q).is_err());
    }

    #[test]
    fn power_rule_values() {
        assert_relative_eq!(sumudu_power_rule(1.0, 7.0).unwrap(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(sumudu_power_rule(2.0, 3.0).unwrap(), 3.0, max_relative = 1e-15);
        assert_relative_eq!(sumudu_power_rule(2.5, 1.0).unwrap(), 1.329_340_388_179_137, max_relative = 1e-14);
        assert!(sumudu_power_rule(0.0, 1.0).is_err());
    }

    #[test]
    fn rl_rule() {
        assert_relative_eq!(sumudu_rl_rule(1.0, 0.3, 1.0).unwrap(), 0.3);
        assert_relative_eq!(sumudu_rl_rule(1.0, 1.0, 0.5).unwrap(), 1.0);
        assert!(sumudu_rl_rule(1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn inverse_rules() {
        // u² ↦ t²/2 or t/Γ(2)
        assert_relative_eq!(inverse_sumudu_power(2.0, 0.7, InverseRule::Power).unwrap(), 0.245, max_relative = 1e-14);
        assert_relative_eq!(inverse_sumudu_power(2.0, 0.7, InverseRule::Printed).unwrap(), 0.7, max_relative = 1e-14);
        // u^0 under the printed rule hits 1/Γ(0)
        assert_eq!(inverse_sumudu_power(0.0, 0.7, InverseRule::Printed).unwrap(), 0.0);
        assert_eq!(inverse_sumudu_power(0.0, 0.7, InverseRule::Power).unwrap(), 1.0);
    }

    #[test]
    fn closed_image_vanishes_at_origin() {
        let pol = TruncationPolicy::default();
        let p = KStruveParams::new(1.0, 0.0, 1.0).unwrap();
        let small = sumudu_kstruve_closed(&p, 1.0, 1e-8, &pol).unwrap().value;
        // leading behaviour (u/2)·Γ(2)/(Γ(3/2)²) = 2u/π
        assert_relative_eq!(small, 2e-8 / std::f64::consts::PI, max_relative = 1e-6);
    }

    #[test]
    fn closed_image_outside_radius_is_rejected() {
        let pol = TruncationPolicy::default();
        let p = KStruveParams::new(1.0, 1.0, 1.0).unwrap();
        assert!(sumudu_kstruve_closed(&p, 1.0, 1.5, &pol).is_err());
        assert!(sumudu_kstruve_closed(&p, 2.0, 0.4, &pol).is_ok());
    }

    #[test]
    fn inverse_image_at_origin() {
        let pol = TruncationPolicy::default();
        let p = KStruveParams::new(1.0, 1.0, 1.0).unwrap();
        assert_eq!(inverse_sumudu_kstruve(&p, 0.0, &pol).unwrap().value, 0.0);
        let neg = KStruveParams::new(1.0, -0.5, 1.0).unwrap();
        assert!(inverse_sumudu_kstruve(&neg, 0.0, &pol).is_err());
    }
}

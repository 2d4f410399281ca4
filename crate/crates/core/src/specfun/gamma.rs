//! Gamma and k-Gamma.

use crate::error::{domain, Result};

/// `ln Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return domain(format!("log_gamma requires finite x > 0, got {x}"));
    }
    Ok(libm::lgamma_r(x).0)
}

/// `Γ(x)` for `x > 0`.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return domain(format!("gamma requires finite x > 0, got {x}"));
    }
    Ok(libm::tgamma(x))
}

/// `(ln|Γ(x)|, sign Γ(x))` for any real `x`, or `None` at the poles
/// `x ∈ {0, −1, −2, …}` where `1/Γ(x) = 0`.
pub fn ln_gamma_signed(x: f64) -> Option<(f64, f64)> {
    if x <= 0.0 && x == x.floor() {
        return None;
    }
    let (lg, sign) = libm::lgamma_r(x);
    Some((lg, if sign < 0 { -1.0 } else { 1.0 }))
}

fn check_k_gamma_args(gamma: f64, k: f64) -> Result<()> {
    if !(k > 0.0) || !k.is_finite() {
        return domain(format!("k-Gamma requires k > 0, got k = {k}"));
    }
    if !(gamma > 0.0) || !gamma.is_finite() {
        return domain(format!("k-Gamma requires gamma > 0, got gamma = {gamma}"));
    }
    Ok(())
}

/// `ln Γ_k(γ) = (γ/k − 1)·ln k + ln Γ(γ/k)`.
pub fn log_k_gamma(gamma: f64, k: f64) -> Result<f64> {
    check_k_gamma_args(gamma, k)?;
    let ratio = gamma / k;
    let scale = if k == 1.0 { 0.0 } else { (ratio - 1.0) * k.ln() };
    Ok(scale + log_gamma(ratio)?)
}

/// `Γ_k(γ) = k^(γ/k − 1)·Γ(γ/k)`.
pub fn k_gamma(gamma: f64, k: f64) -> Result<f64> {
    check_k_gamma_args(gamma, k)?;
    let ratio = gamma / k;
    if k == 1.0 {
        return self::gamma(ratio);
    }
    Ok(k.powf(ratio - 1.0) * self::gamma(ratio)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn trivial_values() {
        assert_eq!(log_gamma(1.0).unwrap(), 0.0);
        assert_eq!(log_gamma(2.0).unwrap(), 0.0);
        assert_relative_eq!(
            log_gamma(0.5).unwrap(),
            0.5 * std::f64::consts::PI.ln(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn rejects_non_positive() {
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
        assert!(log_gamma(f64::NAN).is_err());
        assert!(k_gamma(1.0, 0.0).is_err());
        assert!(k_gamma(-1.0, 1.0).is_err());
    }

    #[test]
    fn k_gamma_unit_at_k() {
        for k in [0.5, 1.0, 2.0, 3.0] {
            assert_relative_eq!(k_gamma(k, k).unwrap(), 1.0, max_relative = 1e-14);
        }
    }

    #[test]
    fn k_gamma_three_two() {
        // √2·Γ(3/2) = √2·√π/2
        let expected = 2f64.sqrt() * std::f64::consts::PI.sqrt() / 2.0;
        assert_relative_eq!(k_gamma(3.0, 2.0).unwrap(), expected, max_relative = 1e-14);
        assert_relative_eq!(k_gamma(3.0, 2.0).unwrap(), 1.253_314_137_315_500_3, max_relative = 1e-14);
    }

    #[test]
    fn reflection_sign() {
        let (lg, s) = ln_gamma_signed(-0.5).unwrap();
        // Γ(−1/2) = −2√π
        assert_eq!(s, -1.0);
        assert_relative_eq!(lg, (2.0 * std::f64::consts::PI.sqrt()).ln(), max_relative = 1e-14);
        assert!(ln_gamma_signed(0.0).is_none());
        assert!(ln_gamma_signed(-3.0).is_none());
    }
}

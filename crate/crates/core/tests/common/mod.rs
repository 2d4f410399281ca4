//! Reference values shared by the integration tests.
//!
//! Two kinds of oracle live here: series summed in double-double arithmetic
//! (`twofloat`) through exact term-ratio recurrences, and constants frozen
//! from a 40-digit reference evaluation.

#![allow(dead_code)]

use twofloat::{consts, TwoFloat};

fn tf(x: f64) -> TwoFloat {
    TwoFloat::from(x)
}

fn sqrt_pi() -> TwoFloat {
    consts::PI.sqrt()
}

/// Sum terms `t_0, t_0 r_0, t_0 r_0 r_1, …` until they stop mattering.
fn ratio_series(first: TwoFloat, ratio: impl Fn(usize) -> TwoFloat) -> f64 {
    let mut term = first;
    let mut sum = first;
    for r in 0..400 {
        term *= ratio(r);
        sum += term;
        if term.hi().abs() < 1e-34 * sum.hi().abs().max(1e-300) {
            break;
        }
    }
    sum.hi() + sum.lo()
}

/// `H_p(x)` for `p ∈ {0, 1}`:
/// `Σ (−1)^r (x/2)^(2r+p+1) / (Γ(r+3/2) Γ(r+p+3/2))`.
pub fn struve_dd(p: u32, x: f64) -> f64 {
    assert!(p <= 1 && x >= 0.0);
    let half = tf(x) / 2.0;
    // Γ(3/2) = √π/2, Γ(5/2) = 3√π/4
    let g_first = if p == 0 { sqrt_pi() / 2.0 } else { sqrt_pi() * 3.0 / 4.0 };
    let lead = if p == 0 { half } else { half * half };
    let first = lead / (sqrt_pi() / 2.0 * g_first);
    let pf = p as f64;
    ratio_series(first, |r| {
        let rf = r as f64;
        -(half * half) / ((tf(rf) + 1.5) * (tf(rf) + pf + 1.5))
    })
}

/// k-Struve with `k = 2, ν = 1, c = 1`. Here `Γ_2(2r+4) = 2^(r+1) (r+1)!`,
/// so the terms are `(−1)^r (x/2)^(2r+3/2) / (2^(r+1) (r+1)! Γ(r+3/2))`.
pub fn k_struve_k2_nu1_dd(x: f64) -> f64 {
    assert!(x >= 0.0);
    let half = tf(x) / 2.0;
    let first = half * half.sqrt() / sqrt_pi();
    ratio_series(first, |r| {
        let rf = r as f64;
        -(half * half) / ((tf(rf) + 2.0) * 2.0 * (tf(rf) + 1.5))
    })
}

/// `E_{1/2, 3/2}(z) = Σ z^n / Γ(n/2 + 3/2)`, split into even and odd `n`:
/// even terms carry `Γ(m + 3/2)`, odd ones `Γ(m + 2) = (m+1)!`.
pub fn ml_half_three_halves_dd(z: f64) -> f64 {
    let zz = tf(z) * tf(z);
    let even = ratio_series(tf(2.0) / sqrt_pi(), |m| zz / (tf(m as f64) + 1.5));
    let odd = ratio_series(tf(z), |m| zz / (tf(m as f64) + 2.0));
    even + odd
}

/// `Γ(n + 1/2)` for integer `n ≥ 0`, in double-double.
pub fn gamma_half_integer_dd(n: u32) -> f64 {
    let mut g = sqrt_pi();
    for i in 0..n {
        g *= tf(i as f64) + 0.5;
    }
    g.hi() + g.lo()
}

/// Frozen reference values (40-digit evaluation, rounded to 22).
pub mod frozen {
    pub const STRUVE_H0_AT_1: f64 = 0.5686566270482879509864;
    pub const STRUVE_H1_AT_2: f64 = 0.6467637282835621171228;
    pub const K_STRUVE_K2_NU1_C1_AT_1: f64 = 0.1912971343624248569373;
    pub const ML_HALF_THREE_HALVES_AT_MINUS_QUARTER: f64 = 0.9186138090760130243330;
    pub const K_GAMMA_3_2: f64 = 1.2533141373155002512;
    pub const GAMMA_5_2: f64 = 1.3293403881791370205;
    pub const GAMMA_2_OVER_GAMMA_5_2: f64 = 0.7522527780636750493;
    pub const ML_HALF_AT_MINUS_1: f64 = 0.4275835761558070044;
    /// Sumudu image of the k-Struve function `(k, ν, c = 1)` at `u`.
    pub const SUMUDU_K1_NU1_U_HALF: f64 = 0.08860608832462932700;
    pub const SUMUDU_K2_NU1_U_QUARTER: f64 = 0.03240931540975344326;
    pub const SUMUDU_K1_NU1_U_1: f64 = 0.23986226185577657480;
    pub const SUMUDU_K1_NU_HALF_U_1: f64 = 0.31552944890528508276;
    /// Exact solution of the kinetic equation `(forcing, ν, k, d, a, t)`,
    /// `μ = c = N0 = 1`, from the double power series.
    pub const KINETIC: [(&str, f64, f64, f64, f64, f64, f64); 4] = [
        ("thm1", 0.9, 1.0, 1.0, 1.0, 1.0, 0.1370771709267526237246),
        ("thm1", 0.9, 2.0, 1.0, 1.0, 1.0, 0.1245740284017188011057),
        ("thm3", 0.5, 2.0, 2.0, 1.0, 0.75, 0.07456734743706397154611),
        ("thm2", 0.7, 1.0, 1.0, 2.0, 0.5, 0.1443859507479552200478),
    ];
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

/// `|a − b| / max(1, |b|)`.
pub fn mixed_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

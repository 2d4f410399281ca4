//! Riemann–Liouville fractional integral by product trapezoidal integration.
//!
//! On a uniform grid the kernel `(t_i − s)^(ν−1)` is integrated exactly
//! against the piecewise-linear interpolant of `f`, which gives
//!
//! ```text
//! I^ν f(t_n) ≈ h^ν / Γ(ν+2) · [ a_n f_0 + Σ_{j=1}^{n−1} c_{n−j} f_j + f_n ]
//! a_n = (n−1)^(ν+1) − (n−ν−1)·n^ν
//! c_m = (m+1)^(ν+1) − 2m^(ν+1) + (m−1)^(ν+1)
//! ```

use super::grid::TimeGrid;
use crate::error::{domain, Result};
use crate::specfun::{log_gamma, NeumaierSum};

/// `(1+x)^p + (1−x)^p − 2` for `0 < x ≤ 1`.
fn symmetric_second_difference(p: f64, x: f64) -> f64 {
    if x > 0.125 {
        return (1.0f64 + x).powf(p) + (1.0 - x).powf(p) - 2.0;
    }
    // 2 Σ_{j≥1} C(p, 2j) x^(2j); C(p, j+1) = C(p, j)(p − j)/(j + 1)
    let mut binom = 1.0;
    let mut sum = 0.0;
    let mut xp = 1.0;
    for j in 0..80 {
        let jf = j as f64;
        binom *= (p - jf) / (jf + 1.0);
        xp *= x;
        if j % 2 == 1 {
            let term = 2.0 * binom * xp;
            sum += term;
            if term.abs() <= 1e-18 * sum.abs() {
                break;
            }
        }
    }
    sum
}

/// `(1−x)^p − 1 + p·x` for `0 < x ≤ 1`.
fn one_sided_remainder(p: f64, x: f64) -> f64 {
    if x > 0.125 {
        return (1.0 - x).powf(p) - 1.0 + p * x;
    }
    // Σ_{j≥2} C(p, j) (−x)^j
    let mut binom = p;
    let mut xp = -x;
    let mut sum = 0.0;
    for j in 1..80 {
        let jf = j as f64;
        binom *= (p - jf) / (jf + 1.0);
        xp *= -x;
        let term = binom * xp;
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// Precomputed product-trapezoid weights for order `ν` on `n` uniform steps
/// of size `h`.
#[derive(Debug, Clone)]
pub struct ProductTrapezoid {
    nu: f64,
    h: f64,
    scale: f64,
    /// `c_m` for `m = 0..n` (`c_0` unused).
    interior: Vec<f64>,
    /// `a_m` for `m = 0..=n` (`a_0` unused).
    first: Vec<f64>,
}

impl ProductTrapezoid {
    pub fn new(nu: f64, h: f64, n: usize) -> Result<Self> {
        if !(nu > 0.0) || !nu.is_finite() {
            return domain(format!("fractional integral order must be > 0, got {nu}"));
        }
        if !(h > 0.0) || !h.is_finite() {
            return domain(format!("grid spacing must be > 0, got {h}"));
        }
        let p = nu + 1.0;
        let scale = (nu * h.ln() - log_gamma(nu + 2.0)?).exp();
        let mut interior = vec![0.0; n.max(1)];
        for (m, c) in interior.iter_mut().enumerate().skip(1) {
            let mf = m as f64;
            *c = mf.powf(p) * symmetric_second_difference(p, 1.0 / mf);
        }
        let mut first = vec![0.0; n + 1];
        for (m, a) in first.iter_mut().enumerate().skip(1) {
            let mf = m as f64;
            *a = mf.powf(p) * one_sided_remainder(p, 1.0 / mf);
        }
        Ok(Self {
            nu,
            h,
            scale,
            interior,
            first,
        })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn spacing(&self) -> f64 {
        self.h
    }

    /// Number of nodes the weights were built for.
    pub fn len(&self) -> usize {
        self.first.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Trapezoid weight of node `j` in `I^ν f(t_i)`, for `1 ≤ j ≤ i`.
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        if j == i {
            self.scale
        } else {
            self.scale * self.interior[i - j]
        }
    }

    /// Weight of `f_0` in `I^ν f(t_i)`.
    pub fn origin_weight(&self, i: usize) -> f64 {
        self.scale * self.first[i]
    }

    /// Weight of the newest node, `h^ν / Γ(ν+2)`.
    pub fn diagonal(&self) -> f64 {
        self.scale
    }

    /// Contribution of the nodes strictly before node `i` (1-based) to
    /// `I^ν f(t_i)`, given `f_0` and `values[j−1] = f(t_j)` for `j < i`.
    pub fn history(&self, i: usize, f0: f64, values: &[f64]) -> f64 {
        let mut acc = NeumaierSum::new();
        if f0 != 0.0 {
            acc.add(self.first[i] * f0);
        }
        for j in 1..i {
            acc.add(self.interior[i - j] * values[j - 1]);
        }
        self.scale * acc.value()
    }

    /// `I^ν f` at every node, given `f_0` and the node values.
    pub fn apply(&self, f0: f64, values: &[f64]) -> Vec<f64> {
        (1..=values.len())
            .map(|i| self.history(i, f0, values) + self.scale * values[i - 1])
            .collect()
    }
}

/// Starting weights that make the product trapezoid exact on `t^γ` for a
/// set of non-integer exponents `0 < γ < 2`, while keeping it exact on `1`
/// and `t`.
///
/// For each node `i` the corrected rule reads
/// `I^ν f(t_i) ≈ trapezoid_i + Σ_{j=1}^{s} W_ij f_j`, where `W_i` solves
/// `Σ_j W_ij (jh)^γ_q = (exact − trapezoid)_i(t^γ_q)` for every exponent.
/// The matrix `j^γ_q` is shared by all rows, so it is factored once.
#[derive(Debug, Clone)]
pub struct StartingWeights {
    exponents: Vec<f64>,
    /// Row-major `n × s`, already scaled by `h^ν`.
    weights: Vec<f64>,
}

impl StartingWeights {
    /// An empty `extra` gives no correction at all.
    pub fn new(trap: &ProductTrapezoid, extra: &[f64]) -> Result<Self> {
        if let Some(g) = extra.iter().find(|g| !(**g > 0.0) || !g.is_finite()) {
            return domain(format!("starting exponents must be positive, got {g}"));
        }
        let mut exponents = Vec::new();
        if !extra.is_empty() {
            exponents.extend([0.0, 1.0]);
            exponents.extend(extra.iter().filter(|g| **g != 1.0));
        }
        let n = trap.len();
        let s = exponents.len();
        if s > n {
            return domain(format!("{s} starting exponents need at least {s} nodes, got {n}"));
        }
        let nu = trap.nu;
        let ln_unscale = log_gamma(nu + 2.0)?;
        let unscale = (-ln_unscale).exp();
        // (exact − trapezoid)(t^γ_q) at node i, in units of h^(γ_q+ν)
        let mut rhs = vec![0.0; n * s];
        for (q, &g) in exponents.iter().enumerate() {
            let ratio = (log_gamma(g + 1.0)? - log_gamma(g + nu + 1.0)? + ln_unscale).exp();
            let powers: Vec<f64> = (0..=n).map(|j| (j as f64).powf(g)).collect();
            for i in 1..=n {
                let mut acc = NeumaierSum::new();
                acc.add(powers[i] + trap.first[i] * powers[0]);
                for j in 1..i {
                    acc.add(trap.interior[i - j] * powers[j]);
                }
                let exact = ratio * (i as f64).powf(g + nu);
                rhs[(i - 1) * s + q] = (exact - acc.value()) * unscale;
            }
        }
        let matrix: Vec<f64> = exponents
            .iter()
            .flat_map(|&g| (1..=s).map(move |j| (j as f64).powf(g)))
            .collect();
        let lu = Lu::factor(matrix, s)?;
        let h_nu = trap.h.powf(nu);
        let mut weights = vec![0.0; n * s];
        for i in 0..n {
            let row = lu.solve(&rhs[i * s..(i + 1) * s]);
            for (w, r) in weights[i * s..(i + 1) * s].iter_mut().zip(row) {
                *w = h_nu * r;
            }
        }
        Ok(Self {
            exponents,
            weights,
        })
    }

    /// All exponents the corrected rule is exact on, `0` and `1` included.
    pub fn exponents(&self) -> &[f64] {
        &self.exponents
    }

    /// Number of corrected starting nodes.
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Weights on `f_1..f_s` for node `i` (1-based).
    pub fn row(&self, i: usize) -> &[f64] {
        let s = self.len();
        &self.weights[(i - 1) * s..i * s]
    }

    /// Correction to `I^ν f(t_i)` given the first `s` node values.
    pub fn correction(&self, i: usize, start: &[f64]) -> f64 {
        self.row(i).iter().zip(start).map(|(w, f)| w * f).sum()
    }
}

/// Dense LU with partial pivoting, for the small starting systems.
pub(crate) struct Lu {
    a: Vec<f64>,
    perm: Vec<usize>,
    n: usize,
}

impl Lu {
    pub(crate) fn factor(mut a: Vec<f64>, n: usize) -> Result<Self> {
        let mut perm: Vec<usize> = (0..n).collect();
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&x, &y| a[x * n + col].abs().total_cmp(&a[y * n + col].abs()))
                .unwrap_or(col);
            if !(a[pivot * n + col].abs() > 0.0) {
                return Err(crate::Error::Solver("singular starting system".into()));
            }
            if pivot != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot * n + k);
                }
                perm.swap(col, pivot);
            }
            for r in col + 1..n {
                let f = a[r * n + col] / a[col * n + col];
                a[r * n + col] = f;
                for k in col + 1..n {
                    a[r * n + k] -= f * a[col * n + k];
                }
            }
        }
        Ok(Self { a, perm, n })
    }

    pub(crate) fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for r in 0..n {
            for k in 0..r {
                x[r] -= self.a[r * n + k] * x[k];
            }
        }
        for r in (0..n).rev() {
            for k in r + 1..n {
                x[r] -= self.a[r * n + k] * x[k];
            }
            x[r] /= self.a[r * n + r];
        }
        x
    }
}

/// `₀D_t^{−ν} f` at each node of `grid`.
///
/// `samples[i]` is `f` at `grid.node(i)`; `f0` is the value (or limit) of
/// `f` at `t = 0`, pass `0.0` when it vanishes there.
pub fn rl_fractional_integral(grid: &TimeGrid, samples: &[f64], nu: f64, f0: f64) -> Result<Vec<f64>> {
    if samples.len() != grid.len() {
        return domain(format!(
            "expected {} samples for the grid, got {}",
            grid.len(),
            samples.len()
        ));
    }
    if let Some(bad) = samples.iter().chain(std::iter::once(&f0)).find(|v| !v.is_finite()) {
        return domain(format!("fractional integral needs finite samples, found {bad}"));
    }
    let weights = ProductTrapezoid::new(nu, grid.spacing(), grid.len())?;
    Ok(weights.apply(f0, samples))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn difference_helpers_match_direct_formulas() {
        for p in [1.3, 1.5, 2.0, 2.7] {
            for x in [0.01, 0.1, 0.125, 0.5, 1.0] {
                let direct = (1.0f64 + x).powf(p) + (1.0 - x).powf(p) - 2.0;
                assert_relative_eq!(symmetric_second_difference(p, x), direct, max_relative = 1e-9);
                let direct = (1.0f64 - x).powf(p) - 1.0 + p * x;
                assert_relative_eq!(one_sided_remainder(p, x), direct, max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn constant_with_unit_order_is_t() {
        let g = TimeGrid::new(2.0, 40).unwrap();
        let ones = vec![1.0; g.len()];
        let out = rl_fractional_integral(&g, &ones, 1.0, 1.0).unwrap();
        for (t, v) in g.points().zip(out) {
            assert_relative_eq!(v, t, max_relative = 1e-13);
        }
    }

    #[test]
    fn linear_data_is_exact() {
        // Piecewise-linear data is integrated exactly: I^ν t = t^(ν+1)/Γ(ν+2).
        let g = TimeGrid::new(1.0, 64).unwrap();
        let samples: Vec<f64> = g.points().collect();
        for nu in [0.3, 0.5, 1.7] {
            let out = rl_fractional_integral(&g, &samples, nu, 0.0).unwrap();
            for (t, v) in g.points().zip(out) {
                let exact = t.powf(nu + 1.0) / libm::tgamma(nu + 2.0);
                assert_relative_eq!(v, exact, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn exponential_unit_order() {
        let g = TimeGrid::new(1.0, 4096).unwrap();
        let samples: Vec<f64> = g.points().map(f64::exp).collect();
        let out = rl_fractional_integral(&g, &samples, 1.0, 1.0).unwrap();
        assert!((out.last().unwrap() - (std::f64::consts::E - 1.0)).abs() < 1e-7);
    }

    #[test]
    fn starting_weights_make_the_rule_exact_on_their_exponents() {
        let n = 64;
        let nu = 0.3;
        let trap = ProductTrapezoid::new(nu, 1.0 / n as f64, n).unwrap();
        let sw = StartingWeights::new(&trap, &[0.3, 0.6, 1.5]).unwrap();
        assert_eq!(sw.exponents(), &[0.0, 1.0, 0.3, 0.6, 1.5]);
        for g in [0.0f64, 0.3, 0.6, 1.0, 1.5] {
            let f0 = if g == 0.0 { 1.0 } else { 0.0 };
            let vals: Vec<f64> = (1..=n).map(|i| (i as f64 / n as f64).powf(g)).collect();
            let out = trap.apply(f0, &vals);
            for i in [1, 2, 7, n] {
                let t = i as f64 / n as f64;
                let exact = libm::tgamma(g + 1.0) / libm::tgamma(g + nu + 1.0) * t.powf(g + nu);
                let got = out[i - 1] + sw.correction(i, &vals[..sw.len()]);
                assert!((got - exact).abs() < 1e-11, "g={g} i={i}: {got} vs {exact}");
            }
        }
    }

    #[test]
    fn no_extra_exponents_means_no_correction() {
        let trap = ProductTrapezoid::new(0.5, 0.1, 10).unwrap();
        assert!(StartingWeights::new(&trap, &[]).unwrap().is_empty());
        assert!(StartingWeights::new(&trap, &[-0.5]).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        let g = TimeGrid::new(1.0, 4).unwrap();
        assert!(rl_fractional_integral(&g, &[1.0; 3], 0.5, 0.0).is_err());
        assert!(rl_fractional_integral(&g, &[1.0; 4], 0.0, 0.0).is_err());
        assert!(rl_fractional_integral(&g, &[1.0, f64::NAN, 1.0, 1.0], 0.5, 0.0).is_err());
    }
}

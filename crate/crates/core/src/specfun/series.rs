//! Guarded series summation shared by every kernel in this module.

use crate::error::{Error, Result};

/// Stop rules for truncated series.
///
/// Summation halts at the first of: `max_terms` reached, a term with
/// `|term| <= rel_tol * |partial_sum|` (partial sum non-zero), or a term whose
/// log-magnitude exceeds `overflow_guard` (reported as an error).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    pub max_terms: usize,
    pub rel_tol: f64,
    pub overflow_guard: f64,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            max_terms: 50,
            rel_tol: 1e-16,
            overflow_guard: 700.0,
        }
    }
}

impl TruncationPolicy {
    pub fn new(max_terms: usize, rel_tol: f64, overflow_guard: f64) -> Result<Self> {
        let pol = Self {
            max_terms,
            rel_tol,
            overflow_guard,
        };
        pol.validate()?;
        Ok(pol)
    }

    /// A policy that always sums exactly `n` terms (no early stop).
    pub fn fixed_terms(n: usize) -> Self {
        Self {
            max_terms: n,
            rel_tol: 0.0,
            ..Self::default()
        }
    }

    pub fn with_max_terms(mut self, n: usize) -> Self {
        self.max_terms = n;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_terms < 1 {
            return crate::error::domain("max_terms must be at least 1");
        }
        if !(self.rel_tol >= 0.0) || !self.rel_tol.is_finite() {
            return crate::error::domain("rel_tol must be a finite real >= 0");
        }
        if !self.overflow_guard.is_finite() {
            return crate::error::domain("overflow_guard must be finite");
        }
        Ok(())
    }
}

/// The value of a truncated series together with its truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub terms_used: usize,
    /// `true` when the relative-tolerance rule stopped the sum, `false` when
    /// `max_terms` was exhausted first.
    pub converged: bool,
}

/// Kahan–Neumaier compensated accumulator.
#[derive(Debug, Default, Clone, Copy)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl std::iter::FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = NeumaierSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Step {
    Continue,
    Done,
}

/// Term-by-term driver applying a [`TruncationPolicy`].
pub(crate) struct Summation<'a> {
    what: &'a str,
    pol: &'a TruncationPolicy,
    acc: NeumaierSum,
    terms: usize,
    partials: Option<Vec<f64>>,
}

impl<'a> Summation<'a> {
    pub(crate) fn new(what: &'a str, pol: &'a TruncationPolicy) -> Self {
        Self {
            what,
            pol,
            acc: NeumaierSum::new(),
            terms: 0,
            partials: None,
        }
    }

    /// Also record every partial sum (needed for sequence acceleration).
    pub(crate) fn recording(mut self) -> Self {
        self.partials = Some(Vec::with_capacity(self.pol.max_terms));
        self
    }

    /// Adds `sign * exp(ln_mag)`, checking the overflow guard first.
    pub(crate) fn add_log(&mut self, sign: f64, ln_mag: f64) -> Result<Step> {
        if ln_mag > self.pol.overflow_guard || ln_mag.is_nan() {
            return Err(Error::Convergence {
                what: self.what.to_string(),
                term: self.terms,
                log_magnitude: ln_mag,
                guard: self.pol.overflow_guard,
            });
        }
        Ok(self.add_value(sign * ln_mag.exp()))
    }

    pub(crate) fn add_value(&mut self, term: f64) -> Step {
        self.terms += 1;
        self.acc.add(term);
        let partial = self.acc.value();
        if let Some(p) = self.partials.as_mut() {
            p.push(partial);
        }
        if partial != 0.0 && term.abs() <= self.pol.rel_tol * partial.abs() {
            Step::Done
        } else {
            Step::Continue
        }
    }

    /// A term that vanishes identically (a reciprocal-Gamma pole). It counts
    /// toward `max_terms` but never triggers the tolerance rule.
    pub(crate) fn add_zero(&mut self) {
        self.terms += 1;
        if let Some(p) = self.partials.as_mut() {
            p.push(self.acc.value());
        }
    }

    pub(crate) fn finish(self, converged: bool) -> SeriesValue {
        SeriesValue {
            value: self.acc.value(),
            terms_used: self.terms,
            converged,
        }
    }

    /// Like [`finish`](Self::finish), but when the plain sum did not settle the
    /// recorded partial sums are extrapolated with Wynn's epsilon algorithm.
    pub(crate) fn finish_accelerated(self, converged: bool) -> SeriesValue {
        let terms = self.terms;
        let plain = self.acc.value();
        match (&self.partials, converged) {
            (Some(p), false) => match wynn_epsilon(p) {
                Some((value, err)) => SeriesValue {
                    value,
                    terms_used: terms,
                    converged: err <= self.pol.rel_tol.max(f64::EPSILON) * 1e3 * value.abs(),
                },
                None => SeriesValue {
                    value: plain,
                    terms_used: terms,
                    converged: false,
                },
            },
            _ => SeriesValue {
                value: plain,
                terms_used: terms,
                converged,
            },
        }
    }
}

/// Wynn's epsilon algorithm on a sequence of partial sums.
///
/// Returns the extrapolated limit and an error estimate (the gap between the
/// last two entries of the selected even column).
pub fn wynn_epsilon(partials: &[f64]) -> Option<(f64, f64)> {
    let n = partials.len();
    if n < 3 {
        return partials.last().map(|&s| (s, f64::INFINITY));
    }
    let mut best: Option<(f64, f64)> = None;
    // prev = eps_{k-1}, cur = eps_k; eps_{-1} = 0 and eps_0 = partial sums.
    let mut prev = vec![0.0; n + 1];
    let mut cur = partials.to_vec();
    let mut k = 0usize;
    while cur.len() >= 2 {
        if k.is_multiple_of(2) {
            let m = cur.len();
            let err = (cur[m - 1] - cur[m - 2]).abs();
            if err.is_finite() && best.is_none_or(|(_, e)| err < e) {
                best = Some((cur[m - 1], err));
            }
        }
        let mut next = Vec::with_capacity(cur.len() - 1);
        for i in 0..cur.len() - 1 {
            let diff = cur[i + 1] - cur[i];
            if diff == 0.0 {
                // The column has stalled; its value is already exact.
                if k.is_multiple_of(2) {
                    return Some((cur[i + 1], 0.0));
                }
                return best;
            }
            next.push(prev[i + 1] + 1.0 / diff);
        }
        if next.iter().any(|v| !v.is_finite()) {
            break;
        }
        prev = cur;
        cur = next;
        k += 1;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neumaier_recovers_cancelled_digits() {
        let xs = [1.0, 1e100, 1.0, -1e100];
        let acc: NeumaierSum = xs.iter().copied().collect();
        assert_eq!(acc.value(), 2.0);
    }

    #[test]
    fn policy_rejects_zero_terms() {
        assert!(TruncationPolicy::new(0, 1e-16, 700.0).is_err());
        assert!(TruncationPolicy::new(1, -1.0, 700.0).is_err());
        assert!(TruncationPolicy::new(1, 0.0, 700.0).is_ok());
    }

    #[test]
    fn overflow_guard_trips() {
        let pol = TruncationPolicy::default();
        let mut s = Summation::new("test", &pol);
        assert!(matches!(s.add_log(1.0, 701.0), Err(Error::Convergence { .. })));
    }

    #[test]
    fn zero_terms_do_not_stop_the_sum() {
        let pol = TruncationPolicy::default();
        let mut s = Summation::new("test", &pol);
        assert_eq!(s.add_value(1.0), Step::Continue);
        s.add_zero();
        assert_eq!(s.add_value(0.5), Step::Continue);
        let v = s.finish(false);
        assert_eq!(v.terms_used, 3);
        assert_eq!(v.value, 1.5);
    }

    #[test]
    fn wynn_accelerates_alternating_harmonic() {
        let mut partials = Vec::new();
        let mut s = 0.0;
        for n in 1..=30 {
            s += if n % 2 == 1 { 1.0 } else { -1.0 } / n as f64;
            partials.push(s);
        }
        let (v, _) = wynn_epsilon(&partials).unwrap();
        assert!((v - std::f64::consts::LN_2).abs() < 1e-12, "{v}");
    }
}

use crate::error::{domain, Result};

/// Uniform grid `t_i = i·h`, `h = t_max / n_points`, `i = 1..=n_points`.
///
/// `t = 0` is not stored; quantities there are defined by their limits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    t_max: f64,
    n_points: usize,
}

impl TimeGrid {
    pub fn new(t_max: f64, n_points: usize) -> Result<Self> {
        if !(t_max > 0.0) || !t_max.is_finite() {
            return domain(format!("time grid needs finite t_max > 0, got {t_max}"));
        }
        if n_points == 0 {
            return domain("time grid needs at least one point");
        }
        Ok(Self { t_max, n_points })
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    pub fn len(&self) -> usize {
        self.n_points
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        self.t_max / self.n_points as f64
    }

    /// The `i`-th stored node, `0 <= i < len()`, i.e. `(i + 1)·h`.
    pub fn node(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.t_max
        } else {
            (i + 1) as f64 * self.spacing()
        }
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.n_points).map(move |i| self.node(i))
    }

    /// The same interval with twice as many points.
    pub fn refined(&self) -> Self {
        Self {
            t_max: self.t_max,
            n_points: 2 * self.n_points,
        }
    }
}

//! Riemann–Liouville integral of `t^(mu-1)` on refined grids, showing the
//! second-order convergence of the product trapezoid rule.
//!
//! cargo run --release --example fractional_integral

use kstruve::specfun::gamma;
use kstruve::transforms::{rl_fractional_integral, TimeGrid};

fn main() -> kstruve::Result<()> {
    for (mu, nu) in [(2.0, 0.5), (3.0, 0.5), (2.5, 1.0), (1.0, 1.5)] {
        let exact = gamma(mu)? / gamma(mu + nu)?;
        println!("I^{nu} t^{} at t = 1, exact {exact:.15}", mu - 1.0);
        let mut previous: Option<f64> = None;
        for n in [256, 512, 1024, 2048, 4096] {
            let grid = TimeGrid::new(1.0, n)?;
            let samples: Vec<f64> = grid.points().map(|t| t.powf(mu - 1.0)).collect();
            let f0 = if mu == 1.0 { 1.0 } else { 0.0 };
            let out = rl_fractional_integral(&grid, &samples, nu, f0)?;
            let err = (out[n - 1] - exact).abs();
            match previous {
                Some(p) if err > 0.0 => println!("  n = {n:>4}: error {err:.3e}  ratio {:.2}", p / err),
                _ => println!("  n = {n:>4}: error {err:.3e}"),
            }
            previous = Some(err);
        }
    }
    Ok(())
}

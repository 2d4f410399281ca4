//! Closed-form solutions of the k-Struve kinetic equation: the formula as
//! printed next to the re-derived one, and the independent k = 1 path.
//!
//! cargo run --release --example kinetic_closed_form

use kstruve::kinetics::{solve_closed_form, solve_corollary_k1, Forcing, KineticProblem, Variant};
use kstruve::specfun::TruncationPolicy;
use kstruve::transforms::TimeGrid;

fn main() -> kstruve::Result<()> {
    let pol = TruncationPolicy::default();
    let grid = TimeGrid::new(1.0, 5)?;
    for forcing in [Forcing::Thm1, Forcing::Thm2, Forcing::Thm3, Forcing::Constant] {
        let p = KineticProblem {
            forcing,
            nu: 0.9,
            a: 2.0,
            ..Default::default()
        };
        let printed = solve_closed_form(&p, &grid, Variant::AsPrinted, &pol)?;
        let consistent = solve_closed_form(&p, &grid, Variant::SumuduConsistent, &pol)?;
        println!("{}", p.describe());
        println!("  {:>5} {:>20} {:>20}", "t", "printed", "consistent");
        for (i, t) in grid.points().enumerate() {
            println!("  {t:>5} {:>20.12e} {:>20.12e}", printed.values[i], consistent.values[i]);
        }
        if forcing != Forcing::Constant {
            let k1 = solve_corollary_k1(&p, &grid, &pol)?;
            let gap = k1
                .values
                .iter()
                .zip(&printed.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            println!("  k = 1 reduction vs printed: max gap {gap:.1e}");
        }
    }
    Ok(())
}

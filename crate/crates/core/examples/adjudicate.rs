//! Both closed forms against the numerical Volterra solver, with a grid
//! doubling check on the solver itself.
//!
//! cargo run --release --example adjudicate

use kstruve::kinetics::{adjudicate, Forcing, KineticProblem};
use kstruve::specfun::TruncationPolicy;
use kstruve::transforms::TimeGrid;

fn main() -> kstruve::Result<()> {
    let grid = TimeGrid::new(1.0, 2048)?;
    let pol = TruncationPolicy::fixed_terms(50);
    let cases = [
        KineticProblem { nu: 0.9, ..Default::default() },
        KineticProblem { forcing: Forcing::Thm2, a: 2.0, nu: 0.7, ..Default::default() },
        KineticProblem { forcing: Forcing::Thm3, nu: 0.5, k: 2.0, ..Default::default() },
        KineticProblem { forcing: Forcing::Constant, nu: 0.3, ..Default::default() },
    ];
    for p in cases {
        let adj = adjudicate(&p, &grid, &pol, 1e-3)?;
        println!("{}", p.describe());
        for r in &adj.reports {
            println!(
                "  {:<11} interior {:.3e}  t_max {:.3e}  agrees {}",
                r.variant.name(),
                r.deviation.max_interior,
                r.deviation.at_t_max,
                r.agrees
            );
        }
        println!(
            "  solver change under doubling {:.2e}, verified {}, verdict {}",
            adj.oracle_change,
            adj.convergence_verified(),
            adj.verdict.name()
        );
    }
    Ok(())
}

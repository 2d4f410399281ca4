//! Sumudu image of a k-Struve function: quadrature against the closed
//! Fox–Wright form, the power rule, and a round trip through the displayed
//! inverse image.
//!
//! cargo run --release --example sumudu_transform

use kstruve::specfun::{k_struve, KStruveParams, TruncationPolicy};
use kstruve::transforms::{
    inverse_sumudu_kstruve, sumudu_kstruve_closed, sumudu_numeric, sumudu_power_rule, QuadratureSpec,
};

fn main() -> kstruve::Result<()> {
    let pol = TruncationPolicy::default().with_max_terms(200);
    println!("{:>3} {:>4} {:>5} {:>22} {:>22} {:>10}", "k", "nu", "u", "quadrature", "closed form", "diff");
    for k in [1.0, 2.0, 3.0] {
        for nu in [0.5, 1.0] {
            let params = KStruveParams::new(k, nu, 1.0)?;
            // the integrand starts like t^(nu/k + 1)
            let q = QuadratureSpec::gauss_laguerre(96).with_endpoint_power(params.leading_exponent());
            for u in [0.05, 0.25, 0.5] {
                let numeric = sumudu_numeric(|t| k_struve(&params, t, &pol).map(|v| v.value), u, &q)?;
                let closed = sumudu_kstruve_closed(&params, 1.0, u, &pol)?.value;
                println!(
                    "{k:>3} {nu:>4} {u:>5} {numeric:>22.15e} {closed:>22.15e} {:>10.2e}",
                    (numeric - closed).abs()
                );
            }
        }
    }

    println!("\npower rule S[t^(mu-1)](u) = Gamma(mu) u^(mu-1)");
    let q = QuadratureSpec::gauss_laguerre(64);
    for mu in [1.0, 1.5, 3.0] {
        let numeric = sumudu_numeric(|t| Ok(t.powf(mu - 1.0)), 0.7, &q.with_endpoint_power(mu - 1.0))?;
        println!("  mu = {mu}: {numeric:.15} vs {:.15}", sumudu_power_rule(mu, 0.7)?);
    }

    // reported only: the displayed inverse image need not transform back
    println!("\nround trip S[inverse image](u) vs k-Struve(u), k = 1, nu = 1, c = 1");
    let params = KStruveParams::new(1.0, 1.0, 1.0)?;
    let q = QuadratureSpec::gauss_laguerre(64).with_endpoint_power(params.nu / params.k);
    for u in [0.25, 0.5, 1.0] {
        let back = sumudu_numeric(|t| inverse_sumudu_kstruve(&params, t, &pol).map(|v| v.value), u, &q)?;
        let direct = k_struve(&params, u, &pol)?.value;
        println!("  u = {u}: {back:.12e} vs {direct:.12e}, ratio {:.6}", back / direct);
    }
    Ok(())
}

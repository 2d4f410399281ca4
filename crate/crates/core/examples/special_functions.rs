//! k-gamma, Struve, k-Struve, Mittag-Leffler and Fox–Wright evaluations.
//!
//! cargo run --example special_functions

use kstruve::specfun::{
    fox_wright, k_gamma, k_struve, mittag_leffler, struve_h, KStruveParams, TruncationPolicy, WrightParams,
};

fn main() -> kstruve::Result<()> {
    let pol = TruncationPolicy::default();

    println!("k-gamma");
    for (g, k) in [(1.0, 1.0), (2.0, 2.0), (3.0, 2.0), (4.5, 3.0)] {
        println!("  Gamma_{k}({g}) = {:.15}", k_gamma(g, k)?);
    }

    println!("Struve H_p(x)");
    for p in [0.0, 1.0, 2.5] {
        let row: Vec<String> = [0.5, 1.0, 2.0, 5.0]
            .iter()
            .map(|&x| struve_h(p, x, &pol).map(|v| format!("{:.12}", v.value)))
            .collect::<kstruve::Result<_>>()?;
        println!("  p = {p}: {}", row.join("  "));
    }

    println!("k-Struve S^k_(nu,c)(x)");
    for (k, nu, c) in [(1.0, 0.0, 1.0), (2.0, 1.0, 1.0), (3.0, 0.5, -1.0)] {
        let params = KStruveParams::new(k, nu, c)?;
        let v = k_struve(&params, 1.0, &pol)?;
        println!("  k = {k}, nu = {nu}, c = {c}: S(1) = {:.15} ({} terms)", v.value, v.terms_used);
    }

    println!("Mittag-Leffler E_(alpha,beta)(z)");
    for (a, b, z) in [(1.0, 1.0, 1.0), (0.5, 1.0, -1.0), (0.5, 1.5, -0.25), (2.0, 1.0, -4.0)] {
        let v = mittag_leffler(a, b, z, &pol.with_max_terms(200))?;
        println!("  E_({a},{b})({z}) = {:.15}", v.value);
    }

    // 1Psi1[(1,1);(1,1);z] = e^z
    let w = WrightParams::new(vec![(1.0, 1.0)], vec![(1.0, 1.0)])?;
    let v = fox_wright(&w, 0.75, &pol)?;
    println!("Fox-Wright 1Psi1(0.75) = {:.15}, exp(0.75) = {:.15}", v.value, 0.75f64.exp());
    Ok(())
}

mod common;

use common::{frozen, mixed_err, rel_err};
use kstruve::kinetics::*;
use kstruve::specfun::{mittag_leffler, TruncationPolicy};
use kstruve::transforms::TimeGrid;
use proptest::prelude::*;

fn pol() -> TruncationPolicy {
    TruncationPolicy::default()
}

fn problem(forcing: Forcing, nu: f64, k: f64) -> KineticProblem {
    KineticProblem {
        forcing,
        nu,
        k,
        ..Default::default()
    }
}

#[test]
fn consistent_form_matches_the_frozen_exact_solution() {
    for (name, nu, k, d, a, t, want) in frozen::KINETIC {
        let p = KineticProblem {
            forcing: name.parse().unwrap(),
            nu,
            k,
            d,
            a,
            ..Default::default()
        };
        let got = closed_form_at(&p, t, Variant::SumuduConsistent, &pol()).unwrap().value;
        assert!(rel_err(got, want) < 1e-13, "{name} nu={nu} k={k}: {got} vs {want}");
    }
}

#[test]
fn printed_form_misses_the_exact_solution() {
    for (name, nu, k, d, a, t, want) in frozen::KINETIC {
        let p = KineticProblem {
            forcing: name.parse().unwrap(),
            nu,
            k,
            d,
            a,
            ..Default::default()
        };
        let got = closed_form_at(&p, t, Variant::AsPrinted, &pol()).unwrap().value;
        // well outside the default validate tolerance of 1e-3
        assert!(rel_err(got, want) > 5e-3, "{name} nu={nu} k={k}");
    }
}

#[test]
fn oracle_agrees_with_the_frozen_exact_solution() {
    for (name, nu, k, d, a, t, want) in frozen::KINETIC {
        let p = KineticProblem {
            forcing: name.parse().unwrap(),
            nu,
            k,
            d,
            a,
            ..Default::default()
        };
        let grid = TimeGrid::new(t, 2048).unwrap();
        let res = volterra_oracle(&p, &grid).unwrap();
        assert!(rel_err(*res.values.last().unwrap(), want) < 1e-6, "{name} nu={nu} k={k}");
        assert!(res.residual_norm < 1e-12);
    }
}

#[test]
fn constant_forcing_gives_mittag_leffler_relaxation() {
    for nu in [0.5, 0.8, 1.0, 1.6] {
        let mut p = problem(Forcing::Constant, nu, 1.0);
        p.d = 1.3;
        p.n0 = 2.0;
        let grid = TimeGrid::new(1.0, 4096).unwrap();
        let oracle = volterra_oracle(&p, &grid).unwrap();
        for variant in Variant::ALL {
            let sol = solve_closed_form(&p, &grid, variant, &pol()).unwrap();
            for (i, t) in grid.points().enumerate().step_by(211) {
                let e = 2.0 * mittag_leffler(nu, 1.0, -(1.3 * t).powf(nu), &pol()).unwrap().value;
                assert!(rel_err(sol.values[i], e) < 1e-13);
                assert!((oracle.values[i] - e).abs() < 1e-6, "nu={nu} t={t}");
            }
        }
    }
}

#[test]
fn unit_order_constant_forcing_is_classical_decay() {
    let p = KineticProblem {
        forcing: Forcing::Constant,
        d: 0.7,
        n0: 3.0,
        ..Default::default()
    };
    for t in [0.1, 0.5, 1.0, 2.0] {
        let v = closed_form_at(&p, t, Variant::SumuduConsistent, &pol()).unwrap().value;
        assert!(rel_err(v, classical_decay(3.0, 0.7, t)) < 1e-14);
    }
}

#[test]
fn corollary_path_matches_the_general_evaluator_at_unit_k() {
    let grid = TimeGrid::new(1.0, 200).unwrap();
    for forcing in [Forcing::Thm1, Forcing::Thm2, Forcing::Thm3] {
        for nu in [0.5, 1.0, 1.5] {
            let mut p = problem(forcing, nu, 1.0);
            p.a = 2.0;
            p.d = 0.8;
            let a = solve_corollary_k1(&p, &grid, &pol()).unwrap();
            let b = solve_closed_form(&p, &grid, Variant::AsPrinted, &pol()).unwrap();
            for (x, y) in a.values.iter().zip(&b.values) {
                assert!(mixed_err(*x, *y) < 1e-14, "{forcing} nu={nu}: {x} vs {y}");
            }
        }
    }
}

#[test]
fn corollary_path_rejects_other_k() {
    let grid = TimeGrid::new(1.0, 10).unwrap();
    assert!(solve_corollary_k1(&problem(Forcing::Thm1, 0.5, 2.0), &grid, &pol()).is_err());
    assert!(solve_corollary_k1(&problem(Forcing::Constant, 0.5, 1.0), &grid, &pol()).is_err());
}

#[test]
fn adjudication_prefers_the_consistent_form() {
    let grid = TimeGrid::new(1.0, 1024).unwrap();
    for forcing in [Forcing::Thm1, Forcing::Thm3] {
        let p = problem(forcing, 0.9, 1.0);
        let adj = adjudicate(&p, &grid, &pol(), 1e-3).unwrap();
        assert_eq!(adj.verdict, Verdict::ConsistentOnly, "{forcing}");
        assert!(adj.report(Variant::SumuduConsistent).deviation.max_interior < 1e-5);
        assert!(adj.report(Variant::AsPrinted).deviation.at_t_max > 0.1);
        assert!(adj.convergence_verified());
    }
}

#[test]
fn constant_forcing_adjudicates_as_both() {
    let grid = TimeGrid::new(1.0, 1024).unwrap();
    let adj = adjudicate(&problem(Forcing::Constant, 0.7, 1.0), &grid, &pol(), 1e-4).unwrap();
    assert_eq!(adj.verdict, Verdict::Both);
}

#[test]
fn oracle_converges_at_second_order_for_smooth_solutions() {
    let p = problem(Forcing::Thm1, 1.0, 1.0);
    let exact = closed_form_at(&p, 1.0, Variant::SumuduConsistent, &pol()).unwrap().value;
    let err = |n: usize| {
        let res = volterra_oracle(&p, &TimeGrid::new(1.0, n).unwrap()).unwrap();
        (res.values.last().unwrap() - exact).abs()
    };
    let (e1, e2) = (err(256), err(512));
    assert!(e1 / e2 > 3.5, "{e1:e} {e2:e}");
}

#[test]
fn richardson_improves_the_oracle() {
    let p = problem(Forcing::Thm1, 1.0, 2.0);
    let grid = TimeGrid::new(1.0, 128).unwrap();
    let coarse = volterra_oracle(&p, &grid).unwrap();
    let fine = volterra_oracle(&p, &grid.refined()).unwrap();
    let extrapolated = richardson(&coarse, &fine).unwrap();
    let exact = closed_form_at(&p, 1.0, Variant::SumuduConsistent, &pol()).unwrap().value;
    let before = (fine.values.last().unwrap() - exact).abs();
    let after = (extrapolated.last().unwrap() - exact).abs();
    assert!(after < before / 10.0, "{after:e} vs {before:e}");
    assert!(richardson(&fine, &coarse).is_err());
}

#[test]
fn starting_exponent_sets() {
    assert_eq!(starting_exponents(&problem(Forcing::Constant, 1.0, 1.0)), Vec::<f64>::new());
    let e = starting_exponents(&problem(Forcing::Thm1, 0.45, 1.0));
    assert!(e.len() <= MAX_STARTING_EXPONENTS);
    assert!(e.iter().all(|g| *g > 0.0 && *g < 2.0 && g.fract() != 0.0));
}

#[test]
fn invalid_problems_are_domain_errors() {
    let grid = TimeGrid::new(1.0, 8).unwrap();
    let same_scale = KineticProblem {
        forcing: Forcing::Thm2,
        a: 1.0,
        d: 1.0,
        ..Default::default()
    };
    assert!(matches!(same_scale.validate(), Err(kstruve::Error::Domain(_))));
    for bad in [
        KineticProblem { nu: 0.0, ..Default::default() },
        KineticProblem { d: -1.0, ..Default::default() },
        KineticProblem { n0: 0.0, ..Default::default() },
        KineticProblem { k: 0.0, ..Default::default() },
    ] {
        assert!(bad.validate().is_err());
        assert!(solve_closed_form(&bad, &grid, Variant::AsPrinted, &pol()).is_err());
    }
    // mu/k + 1 < 0 makes the forcing singular at the origin
    let singular = KineticProblem { mu: -1.2, ..Default::default() };
    assert!(matches!(volterra_oracle(&singular, &grid), Err(kstruve::Error::Domain(_))));
    assert!(closed_form_at(&KineticProblem::default(), 0.0, Variant::AsPrinted, &pol()).is_err());
}

#[test]
fn forcing_names_round_trip() {
    for f in Forcing::ALL {
        assert_eq!(f.name().parse::<Forcing>().unwrap(), f);
    }
    assert!("thm4".parse::<Forcing>().is_err());
    for v in Variant::ALL {
        assert_eq!(v.name().parse::<Variant>().unwrap(), v);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn solutions_are_linear_in_the_initial_density(n0 in 0.01f64..100.0, nu in 0.3f64..1.8, t in 0.05f64..1.0) {
        let unit = problem(Forcing::Thm1, nu, 1.5);
        let scaled = KineticProblem { n0, ..unit };
        for variant in Variant::ALL {
            let a = closed_form_at(&unit, t, variant, &pol()).unwrap().value;
            let b = closed_form_at(&scaled, t, variant, &pol()).unwrap().value;
            prop_assert!((b - n0 * a).abs() <= 1e-14 * (n0 * a).abs().max(1e-300));
        }
        let grid = TimeGrid::new(t, 32).unwrap();
        let oa = volterra_oracle(&unit, &grid).unwrap();
        let ob = volterra_oracle(&scaled, &grid).unwrap();
        for (x, y) in oa.values.iter().zip(&ob.values) {
            prop_assert!((y - n0 * x).abs() <= 1e-12 * (n0 * x).abs().max(1e-300));
        }
    }

    #[test]
    fn monotonicity_of_sorted_data(mut xs in prop::collection::vec(-10.0f64..10.0, 2..50)) {
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        prop_assume!(xs.len() >= 2);
        prop_assert_eq!(monotonicity(&xs), Monotonicity::Increasing);
        xs.reverse();
        prop_assert_eq!(monotonicity(&xs), Monotonicity::Decreasing);
    }
}

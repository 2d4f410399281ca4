use std::io::Write;

use super::args::{
    Command, EvalArgs, EvalFn, FiguresArgs, Format, SolveArgs, SweepArgs, SweepSource, ValidateArgs,
};
use super::output::{fmt_f, prefixed, with_extension, write_atomic, ConfigRecord, Csv};
use super::svg::{Chart, Series};
use super::CliError;
use crate::kinetics::{
    adjudicate, monotonicity, relative_deviation, solve_closed_form, volterra_oracle, Forcing, KineticProblem,
    SeriesSolution, Variant, Verdict,
};
use crate::specfun::{k_gamma, k_struve, mittag_leffler, struve_h, KStruveParams, SeriesValue, TruncationPolicy};
use crate::transforms::{sumudu_kstruve_closed, TimeGrid};

/// Orders plotted in every figure.
pub const FIGURE_ORDERS: [f64; 5] = [0.5, 0.7, 0.9, 1.0, 1.5];
/// Terms summed for every figure curve.
pub const FIGURE_TERMS: usize = 50;

pub fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Eval(a) => eval(a, out),
        Command::Solve(a) => solve(a, out, err),
        Command::Validate(a) => validate(a, out, err),
        Command::Sweep(a) => sweep(a, out, err),
        Command::Figures(a) => figures(a, out),
    }
}

fn io_error(e: std::io::Error) -> CliError {
    CliError::Input(format!("cannot write output: {e}"))
}

fn check_destination(output: Option<&str>, format: Format) -> Result<(), CliError> {
    if output.is_none() && format.svg() {
        return Err(CliError::Input("--format svg/both needs --output".into()));
    }
    Ok(())
}

fn emit(
    output: Option<&str>,
    format: Format,
    csv: &Csv,
    chart: impl FnOnce() -> Chart,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match output {
        None => out.write_all(csv.as_str().as_bytes()).map_err(io_error),
        Some(prefix) => {
            if format.csv() {
                write_atomic(&with_extension(prefix, "csv"), csv.as_str())?;
            }
            if format.svg() {
                write_atomic(&with_extension(prefix, "svg"), &chart().render())?;
            }
            Ok(())
        }
    }
}

fn curve(label: impl Into<String>, grid: &TimeGrid, values: &[f64]) -> Series {
    Series {
        label: label.into(),
        points: grid.points().zip(values.iter().copied()).collect(),
    }
}

fn warn_truncated(err: &mut dyn Write, s: &SeriesSolution) {
    let n = s.truncation_flag.iter().filter(|f| **f).count();
    if n > 0 {
        let _ = writeln!(
            err,
            "warning: {} series stopped at max_terms before settling at {n} of {} nodes",
            s.variant,
            s.truncation_flag.len()
        );
    }
}

fn eval(a: EvalArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let pol = a.truncation.policy()?;
    let (key, points) = match a.function {
        EvalFn::Struve | EvalFn::Kstruve => ("x", &a.x),
        EvalFn::MittagLeffler => ("z", &a.z),
        EvalFn::Kgamma => ("gamma", &a.gamma),
        EvalFn::SumuduKstruve => ("u", &a.u),
    };
    let points = points
        .as_ref()
        .ok_or_else(|| CliError::Input(format!("--{key} is required for --fn {}", a.function.name())))?;

    let mut cfg = ConfigRecord::new("eval");
    cfg.push("fn", a.function.name()).push_list(key, points);
    match a.function {
        EvalFn::Struve => {
            cfg.push_f("nu", a.nu);
        }
        EvalFn::Kstruve => {
            cfg.push_f("k", a.k).push_f("nu", a.nu).push_f("c", a.c);
        }
        EvalFn::MittagLeffler => {
            cfg.push_f("alpha", a.alpha).push_f("beta", a.beta);
        }
        EvalFn::Kgamma => {
            cfg.push_f("k", a.k);
        }
        EvalFn::SumuduKstruve => {
            cfg.push_f("k", a.k).push_f("nu", a.nu).push_f("c", a.c).push_f("scale", a.scale);
        }
    }
    a.truncation.record(&mut cfg);

    let mut csv = Csv::new(&cfg, &["x", "value", "terms_used"]);
    for &x in points {
        let v = match a.function {
            EvalFn::Struve => struve_h(a.nu, x, &pol)?,
            EvalFn::Kstruve => k_struve(&KStruveParams::new(a.k, a.nu, a.c)?, x, &pol)?,
            EvalFn::MittagLeffler => mittag_leffler(a.alpha, a.beta, x, &pol)?,
            EvalFn::Kgamma => SeriesValue {
                value: k_gamma(x, a.k)?,
                terms_used: 0,
                converged: true,
            },
            EvalFn::SumuduKstruve => sumudu_kstruve_closed(&KStruveParams::new(a.k, a.nu, a.c)?, a.scale, x, &pol)?,
        };
        csv.row(&[fmt_f(x), fmt_f(v.value), v.terms_used.to_string()]);
    }
    emit(a.io.output.as_deref(), Format::Csv, &csv, || unreachable!(), out)
}

fn solve(a: SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    check_destination(a.io.output.as_deref(), a.format)?;
    let p = a.problem.problem();
    p.validate()?;
    let grid = a.grid.grid()?;
    let pol = a.truncation.policy()?;
    let printed = solve_closed_form(&p, &grid, Variant::AsPrinted, &pol)?;
    let consistent = solve_closed_form(&p, &grid, Variant::SumuduConsistent, &pol)?;
    warn_truncated(err, &printed);
    warn_truncated(err, &consistent);

    let mut cfg = ConfigRecord::new("solve");
    a.problem.record(&mut cfg);
    a.grid.record(&mut cfg);
    a.truncation.record(&mut cfg);
    cfg.push("format", a.format.name());
    let mut csv = Csv::new(&cfg, &["t", "N_printed", "N_consistent"]);
    for ((t, np), nc) in grid.points().zip(&printed.values).zip(&consistent.values) {
        csv.row(&[fmt_f(t), fmt_f(*np), fmt_f(*nc)]);
    }
    let chart = || Chart {
        title: format!("Closed forms, forcing {}, nu = {}, k = {}", p.forcing, p.nu, p.k),
        x_label: "t".into(),
        y_label: "N(t)".into(),
        series: vec![
            curve("printed", &grid, &printed.values),
            curve("consistent", &grid, &consistent.values),
        ],
    };
    emit(a.io.output.as_deref(), a.format, &csv, chart, out)
}

fn validate(a: ValidateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    check_destination(a.io.output.as_deref(), a.format)?;
    if !(a.tol > 0.0) || !a.tol.is_finite() {
        return Err(CliError::Input(format!("--tol must be a positive number, got {}", a.tol)));
    }
    let p = a.problem.problem();
    let grid = a.grid.grid()?;
    let pol = a.truncation.policy()?;
    let adj = adjudicate(&p, &grid, &pol, a.tol)?;
    let printed = adj.report(Variant::AsPrinted);
    let consistent = adj.report(Variant::SumuduConsistent);

    let mut cfg = ConfigRecord::new("validate");
    a.problem.record(&mut cfg);
    a.grid.record(&mut cfg);
    a.truncation.record(&mut cfg);
    cfg.push_f("tol", a.tol).push("format", a.format.name());
    let mut csv = Csv::new(
        &cfg,
        &["t", "N_oracle", "N_printed", "N_consistent", "dev_printed", "dev_consistent"],
    );
    for (i, t) in grid.points().enumerate() {
        let o = adj.oracle.values[i];
        let np = printed.solution.values[i];
        let nc = consistent.solution.values[i];
        csv.row(&[
            fmt_f(t),
            fmt_f(o),
            fmt_f(np),
            fmt_f(nc),
            fmt_f(relative_deviation(np, o)),
            fmt_f(relative_deviation(nc, o)),
        ]);
    }
    let mut summary = format!(
        "summary verdict={} tol={:?} convergence_verified={} oracle_change={} oracle_residual={}",
        adj.verdict.name(),
        a.tol,
        adj.convergence_verified(),
        fmt_f(adj.oracle_change),
        fmt_f(adj.oracle.residual_norm)
    );
    for r in [printed, consistent] {
        summary.push_str(&format!(
            " {v}_max_interior={} {v}_at_t_max={} {v}_agrees={} {v}_resolved={}",
            fmt_f(r.deviation.max_interior),
            fmt_f(r.deviation.at_t_max),
            r.agrees,
            r.resolved,
            v = r.variant.name()
        ));
    }
    csv.comment(&summary);

    let _ = writeln!(err, "{}", p.describe());
    let _ = writeln!(
        err,
        "{:<11} {:>14} {:>14} {:>14} {:>14} {:>7} {:>9}",
        "variant", "dev_interior", "dev_t_max", "dev_int_2n", "dev_t_max_2n", "agrees", "resolved"
    );
    for r in [printed, consistent] {
        let _ = writeln!(
            err,
            "{:<11} {:>14.6e} {:>14.6e} {:>14.6e} {:>14.6e} {:>7} {:>9}",
            r.variant.name(),
            r.deviation.max_interior,
            r.deviation.at_t_max,
            r.deviation_refined.max_interior,
            r.deviation_refined.at_t_max,
            r.agrees,
            r.resolved
        );
    }
    let _ = writeln!(
        err,
        "solver: grid-doubling change {:.3e}, residual {:.3e}, convergence verified: {}",
        adj.oracle_change,
        adj.oracle.residual_norm,
        adj.convergence_verified()
    );
    let _ = writeln!(err, "verdict: {} (tol {:?} at t_max)", adj.verdict.name(), a.tol);

    let chart = || Chart {
        title: format!("Solver vs closed forms, forcing {}, nu = {}, k = {}", p.forcing, p.nu, p.k),
        x_label: "t".into(),
        y_label: "N(t)".into(),
        series: vec![
            curve("solver", &grid, &adj.oracle.values),
            curve("printed", &grid, &printed.solution.values),
            curve("consistent", &grid, &consistent.solution.values),
        ],
    };
    emit(a.io.output.as_deref(), a.format, &csv, chart, out)?;
    if adj.verdict == Verdict::Neither {
        return Err(CliError::Disagreement(format!(
            "neither closed form agrees with the solver within {:?} at t_max",
            a.tol
        )));
    }
    Ok(())
}

fn sweep_values(source: SweepSource, p: &KineticProblem, grid: &TimeGrid, pol: &TruncationPolicy) -> crate::Result<Vec<f64>> {
    match source {
        SweepSource::Printed => Ok(solve_closed_form(p, grid, Variant::AsPrinted, pol)?.values),
        SweepSource::Consistent => Ok(solve_closed_form(p, grid, Variant::SumuduConsistent, pol)?.values),
        SweepSource::Oracle => Ok(volterra_oracle(p, grid)?.values),
    }
}

fn sweep(a: SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    check_destination(a.io.output.as_deref(), a.format)?;
    let grid = a.grid.grid()?;
    let pol = a.truncation.policy()?;
    let base = a.problem.problem();
    let mut curves = Vec::with_capacity(a.values.len());
    for &v in &a.values {
        let mut p = base;
        a.param.apply(&mut p, v);
        p.validate()?;
        curves.push(sweep_values(a.variant, &p, &grid, &pol)?);
    }

    let mut cfg = ConfigRecord::new("sweep");
    cfg.push("param", a.param.name())
        .push_list("values", &a.values)
        .push("variant", a.variant.name());
    a.problem.record(&mut cfg);
    a.grid.record(&mut cfg);
    a.truncation.record(&mut cfg);
    cfg.push("format", a.format.name());
    let mut csv = Csv::new(&cfg, &["param", "value", "t", "N"]);
    for (v, values) in a.values.iter().zip(&curves) {
        for (t, n) in grid.points().zip(values) {
            csv.row(&[a.param.name().to_string(), fmt_f(*v), fmt_f(t), fmt_f(*n)]);
        }
    }

    let mut ends: Vec<(f64, f64)> = a.values.iter().zip(&curves).map(|(v, c)| (*v, c[c.len() - 1])).collect();
    ends.sort_by(|x, y| x.0.total_cmp(&y.0));
    let finals: Vec<f64> = ends.iter().map(|e| e.1).collect();
    let _ = writeln!(
        err,
        "N(t_max) is {} in {} over the swept values",
        monotonicity(&finals).name(),
        a.param.name()
    );

    let chart = || Chart {
        title: format!("{} sweep, forcing {}", a.variant.name(), base.forcing),
        x_label: "t".into(),
        y_label: "N(t)".into(),
        series: a
            .values
            .iter()
            .zip(&curves)
            .map(|(v, c)| curve(format!("{} = {v}", a.param.name()), &grid, c))
            .collect(),
    };
    emit(a.io.output.as_deref(), a.format, &csv, chart, out)
}

/// Forcing and `k` of figure `n` (1-based).
pub fn figure_setup(n: usize) -> Option<(Forcing, f64)> {
    match n {
        1..=3 => Some((Forcing::Thm1, n as f64)),
        4..=6 => Some((Forcing::Thm3, (n - 3) as f64)),
        _ => None,
    }
}

/// The problem drawn in figure `n` at order `nu`: every other parameter is 1.
pub fn figure_problem(n: usize, nu: f64) -> Option<KineticProblem> {
    figure_setup(n).map(|(forcing, k)| KineticProblem {
        forcing,
        k,
        nu,
        ..Default::default()
    })
}

struct FigureData {
    n: usize,
    csv: Csv,
    chart: Chart,
    report: Vec<String>,
}

fn figure(n: usize, grid: &TimeGrid, format: Format) -> Result<FigureData, CliError> {
    let pol = TruncationPolicy::fixed_terms(FIGURE_TERMS);
    let (forcing, k) = figure_setup(n).ok_or_else(|| CliError::Input(format!("no figure {n}")))?;
    let mut columns = Vec::with_capacity(FIGURE_ORDERS.len());
    let mut report = Vec::new();
    for nu in FIGURE_ORDERS {
        let p = figure_problem(n, nu).expect("figure number checked above");
        let closed = solve_closed_form(&p, grid, Variant::AsPrinted, &pol)?;
        let oracle = volterra_oracle(&p, grid)?;
        let finite = closed.values.iter().all(|v| v.is_finite());
        let positive = oracle.values.iter().all(|v| *v > 0.0);
        report.push(format!(
            "fig{n} forcing={forcing} k={k} nu={nu}: closed form {} ({}), solver {} ({}), solver positive on (0, t_max]: {}",
            monotonicity(&closed.values).name(),
            if finite { "finite" } else { "NOT finite" },
            monotonicity(&oracle.values).name(),
            if oracle.values.iter().all(|v| v.is_finite()) { "finite" } else { "NOT finite" },
            if positive { "yes" } else { "NO" }
        ));
        columns.push(closed.values);
    }

    let mut cfg = ConfigRecord::new("figures");
    cfg.push("which", n)
        .push("forcing", forcing)
        .push("variant", Variant::AsPrinted.name())
        .push_f("k", k)
        .push_list("nu", &FIGURE_ORDERS)
        .push_f("n0", 1.0)
        .push_f("d", 1.0)
        .push_f("a", 1.0)
        .push_f("mu", 1.0)
        .push_f("c", 1.0)
        .push_f("t_max", grid.t_max())
        .push("n_points", grid.len())
        .push("max_terms", FIGURE_TERMS)
        .push_f("rel_tol", 0.0)
        .push("format", format.name());
    let labels: Vec<String> = FIGURE_ORDERS.iter().map(|nu| format!("nu_{nu}")).collect();
    let mut header = vec!["t"];
    header.extend(labels.iter().map(String::as_str));
    let mut csv = Csv::new(&cfg, &header);
    for (i, t) in grid.points().enumerate() {
        let mut row = vec![fmt_f(t)];
        row.extend(columns.iter().map(|c| fmt_f(c[i])));
        csv.row(&row);
    }
    let chart = Chart {
        title: format!("Figure {n}: forcing {forcing}, k = {k}"),
        x_label: "t".into(),
        y_label: "N(t)".into(),
        series: FIGURE_ORDERS
            .iter()
            .zip(&columns)
            .map(|(nu, c)| curve(format!("nu = {nu}"), grid, c))
            .collect(),
    };
    Ok(FigureData { n, csv, chart, report })
}

fn parse_which(which: &str) -> Result<Vec<usize>, CliError> {
    if which == "all" {
        return Ok((1..=6).collect());
    }
    which
        .split(',')
        .map(|s| match s.trim().parse::<usize>() {
            Ok(n) if (1..=6).contains(&n) => Ok(n),
            _ => Err(CliError::Input(format!("--which expects 1-6 or all, got '{s}'"))),
        })
        .collect()
}

fn figures(a: FiguresArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let which = parse_which(&a.which)?;
    let grid = TimeGrid::new(a.t_max, a.n_points)?;
    let prefix = a.io.output.clone().unwrap_or_default();
    let results: Vec<Result<FigureData, CliError>> = std::thread::scope(|s| {
        let handles: Vec<_> = which.iter().map(|&n| s.spawn(move || figure(n, &grid, a.format))).collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err(CliError::Numerical("figure worker panicked".into()))))
            .collect()
    });
    for r in results {
        let fig = r?;
        if a.format.csv() {
            write_atomic(&prefixed(&prefix, &format!("fig{}.csv", fig.n)), fig.csv.as_str())?;
        }
        if a.format.svg() {
            write_atomic(&prefixed(&prefix, &format!("fig{}.svg", fig.n)), &fig.chart.render())?;
        }
        for line in fig.report {
            writeln!(out, "{line}").map_err(io_error)?;
        }
    }
    Ok(())
}

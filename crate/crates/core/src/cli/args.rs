use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::output::ConfigRecord;
use crate::kinetics::{Forcing, KineticProblem};
use crate::specfun::TruncationPolicy;
use crate::transforms::TimeGrid;

#[derive(Debug, Parser)]
#[command(
    name = "kstruve",
    version,
    about = "k-Struve functions, Sumudu transforms and fractional kinetic equations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a special function at one or more points
    Eval(EvalArgs),
    /// Closed-form solutions of a kinetic problem on a grid
    Solve(SolveArgs),
    /// Compare both closed forms with the numerical solver
    Validate(ValidateArgs),
    /// Closed-form or numerical solutions over a list of parameter values
    Sweep(SweepArgs),
    /// Write the six figure data sets as CSV and SVG
    Figures(FiguresArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Eval(_) => "eval",
            Command::Solve(_) => "solve",
            Command::Validate(_) => "validate",
            Command::Sweep(_) => "sweep",
            Command::Figures(_) => "figures",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
    Both,
}

impl Format {
    pub fn name(&self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Svg => "svg",
            Format::Both => "both",
        }
    }

    pub fn csv(&self) -> bool {
        matches!(self, Format::Csv | Format::Both)
    }

    pub fn svg(&self) -> bool {
        matches!(self, Format::Svg | Format::Both)
    }
}

#[derive(Debug, Clone, Args)]
pub struct IoArgs {
    /// File of `key=value` lines; flags on the command line take precedence
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Output path prefix (stdout when absent)
    #[arg(long, short, value_name = "PREFIX")]
    pub output: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct TruncationArgs {
    #[arg(long, default_value_t = 50)]
    pub max_terms: usize,
    /// Stop once a term falls below this fraction of the sum (0 sums all terms)
    #[arg(long, default_value_t = 1e-16)]
    pub rel_tol: f64,
    #[arg(long, default_value_t = 700.0)]
    pub overflow_guard: f64,
}

impl TruncationArgs {
    pub fn policy(&self) -> crate::Result<TruncationPolicy> {
        TruncationPolicy::new(self.max_terms, self.rel_tol, self.overflow_guard)
    }

    pub fn record(&self, r: &mut ConfigRecord) {
        r.push("max_terms", self.max_terms)
            .push_f("rel_tol", self.rel_tol)
            .push_f("overflow_guard", self.overflow_guard);
    }
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = 1.0)]
    pub t_max: f64,
    #[arg(long, default_value_t = 4096)]
    pub n_points: usize,
}

impl GridArgs {
    pub fn grid(&self) -> crate::Result<TimeGrid> {
        TimeGrid::new(self.t_max, self.n_points)
    }

    pub fn record(&self, r: &mut ConfigRecord) {
        r.push_f("t_max", self.t_max).push("n_points", self.n_points);
    }
}

#[derive(Debug, Clone, Args)]
pub struct ProblemArgs {
    /// Right-hand side: thm1, thm2, thm3 or constant
    #[arg(long, default_value = "thm1")]
    pub forcing: Forcing,
    #[arg(long, default_value_t = 1.0)]
    pub n0: f64,
    #[arg(long, default_value_t = 1.0)]
    pub d: f64,
    /// Forcing scale for thm2 (must differ from d)
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    /// Fractional order
    #[arg(long, default_value_t = 1.0)]
    pub nu: f64,
    /// Order of the k-Struve forcing
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    #[arg(long, default_value_t = 1.0)]
    pub k: f64,
}

impl ProblemArgs {
    pub fn problem(&self) -> KineticProblem {
        KineticProblem {
            n0: self.n0,
            d: self.d,
            a: self.a,
            nu: self.nu,
            mu: self.mu,
            c: self.c,
            k: self.k,
            forcing: self.forcing,
        }
    }

    pub fn record(&self, r: &mut ConfigRecord) {
        r.push("forcing", self.forcing)
            .push_f("n0", self.n0)
            .push_f("d", self.d)
            .push_f("a", self.a)
            .push_f("nu", self.nu)
            .push_f("mu", self.mu)
            .push_f("c", self.c)
            .push_f("k", self.k);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalFn {
    Struve,
    Kstruve,
    #[value(name = "mittag_leffler")]
    MittagLeffler,
    Kgamma,
    #[value(name = "sumudu_kstruve")]
    SumuduKstruve,
}

impl EvalFn {
    pub fn name(&self) -> &'static str {
        match self {
            EvalFn::Struve => "struve",
            EvalFn::Kstruve => "kstruve",
            EvalFn::MittagLeffler => "mittag_leffler",
            EvalFn::Kgamma => "kgamma",
            EvalFn::SumuduKstruve => "sumudu_kstruve",
        }
    }
}

#[derive(Debug, Clone, Args)]
#[command(args_override_self = true)]
pub struct EvalArgs {
    #[arg(long = "fn", value_name = "NAME")]
    pub function: EvalFn,
    /// Argument of struve and kstruve (comma-separated list)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub x: Option<Vec<f64>>,
    /// Argument of mittag_leffler
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub z: Option<Vec<f64>>,
    /// Argument of kgamma
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub gamma: Option<Vec<f64>>,
    /// Argument of sumudu_kstruve
    #[arg(long, value_delimiter = ',')]
    pub u: Option<Vec<f64>>,
    #[arg(long, default_value_t = 1.0)]
    pub k: f64,
    /// Order of struve and kstruve
    #[arg(long, visible_alias = "p", default_value_t = 0.0, allow_negative_numbers = true)]
    pub nu: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub c: f64,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub beta: f64,
    /// Scale inside the transformed k-Struve argument, `(scale·t)^nu`
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
    #[command(flatten)]
    pub truncation: TruncationArgs,
    #[command(flatten)]
    pub io: IoArgs,
}

#[derive(Debug, Clone, Args)]
#[command(args_override_self = true)]
pub struct SolveArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub truncation: TruncationArgs,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub io: IoArgs,
}

#[derive(Debug, Clone, Args)]
#[command(args_override_self = true)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub truncation: TruncationArgs,
    /// Relative tolerance at t_max for a variant to agree with the solver
    #[arg(long, default_value_t = 1e-3)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub io: IoArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepParam {
    Nu,
    K,
    Mu,
    C,
    D,
}

impl SweepParam {
    pub fn name(&self) -> &'static str {
        match self {
            SweepParam::Nu => "nu",
            SweepParam::K => "k",
            SweepParam::Mu => "mu",
            SweepParam::C => "c",
            SweepParam::D => "d",
        }
    }

    pub fn apply(&self, p: &mut KineticProblem, v: f64) {
        match self {
            SweepParam::Nu => p.nu = v,
            SweepParam::K => p.k = v,
            SweepParam::Mu => p.mu = v,
            SweepParam::C => p.c = v,
            SweepParam::D => p.d = v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepSource {
    Printed,
    Consistent,
    Oracle,
}

impl SweepSource {
    pub fn name(&self) -> &'static str {
        match self {
            SweepSource::Printed => "printed",
            SweepSource::Consistent => "consistent",
            SweepSource::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Args)]
#[command(args_override_self = true)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub param: SweepParam,
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    pub values: Vec<f64>,
    #[arg(long, value_enum, default_value = "consistent")]
    pub variant: SweepSource,
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub truncation: TruncationArgs,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub io: IoArgs,
}

#[derive(Debug, Clone, Args)]
#[command(args_override_self = true)]
pub struct FiguresArgs {
    /// Figure number 1-6, or `all`
    #[arg(long, default_value = "all")]
    pub which: String,
    #[arg(long, default_value_t = 1.0)]
    pub t_max: f64,
    #[arg(long, default_value_t = 500)]
    pub n_points: usize,
    #[arg(long, value_enum, default_value = "both")]
    pub format: Format,
    #[command(flatten)]
    pub io: IoArgs,
}

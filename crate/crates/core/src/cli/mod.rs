//! Command-line front end: `eval`, `solve`, `validate`, `sweep` and
//! `figures`.
//!
//! Exit codes are 0 on success, 2 for invalid input, 3 for a numerical
//! failure and 4 when `validate` finds that neither closed form agrees with
//! the solver.
//!
//! `--config <path>` reads `key=value` lines (several pairs per line are
//! allowed, `#` starts a comment line). Each pair becomes `--key value`
//! placed before the command-line flags, so explicit flags win.

mod args;
mod commands;
mod output;
mod svg;

use std::ffi::OsString;
use std::fmt;

use clap::Parser;

pub use args::{Cli, Command, EvalFn, Format, SweepParam, SweepSource};
pub use commands::{figure_problem, figure_setup, FIGURE_ORDERS, FIGURE_TERMS};
pub use output::{fmt_f, ConfigRecord, Csv};
pub use svg::{Chart, Series};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_DISAGREEMENT: i32 = 4;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Input(String),
    Numerical(String),
    Disagreement(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Numerical(_) => EXIT_NUMERICAL,
            CliError::Disagreement(_) => EXIT_DISAGREEMENT,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Numerical(m) | CliError::Disagreement(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        match e {
            crate::Error::Domain(_) => CliError::Input(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

/// Turn the lines of a config file into flags for `command`.
pub fn config_flags(text: &str, command: &str) -> Result<Vec<OsString>, CliError> {
    let mut flags = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split_once('#').map_or(line, |(body, _)| body);
        for pair in line.split_whitespace() {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| CliError::Input(format!("config line {}: expected key=value, got '{pair}'", lineno + 1)))?;
            let key = key.trim_start_matches('-').replace('_', "-");
            match key.as_str() {
                "" => return Err(CliError::Input(format!("config line {}: empty key", lineno + 1))),
                "command" if value == command => continue,
                "command" => {
                    return Err(CliError::Input(format!(
                        "config is for '{value}' but the command is '{command}'"
                    )))
                }
                "config" => return Err(CliError::Input("config files cannot include other config files".into())),
                _ => {}
            }
            flags.push(OsString::from(format!("--{key}")));
            flags.push(OsString::from(value));
        }
    }
    Ok(flags)
}

fn expand_config(mut argv: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let Some(command) = argv.get(1).and_then(|c| c.to_str()).filter(|c| !c.starts_with('-')) else {
        return Ok(argv);
    };
    let command = command.to_string();
    let mut path = None;
    for (i, a) in argv.iter().enumerate().skip(2) {
        let Some(s) = a.to_str() else { continue };
        if s == "--config" {
            path = argv.get(i + 1).cloned();
        } else if let Some(p) = s.strip_prefix("--config=") {
            path = Some(OsString::from(p));
        }
    }
    let Some(path) = path else { return Ok(argv) };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| CliError::Input(format!("cannot read config {}: {e}", path.to_string_lossy())))?;
    let flags = config_flags(&text, &command)?;
    argv.splice(2..2, flags);
    Ok(argv)
}

/// Run the command line `args` (program name first) and return the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let argv = match expand_config(argv) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    match commands::dispatch(cli.command, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_lines_become_flags() {
        let flags = config_flags("# comment\n\nnu=0.5 # order\nforcing=thm2 a=2\nn_points=64\ncommand=solve\n", "solve").unwrap();
        let flags: Vec<&str> = flags.iter().map(|f| f.to_str().unwrap()).collect();
        assert_eq!(
            flags,
            ["--nu", "0.5", "--forcing", "thm2", "--a", "2", "--n-points", "64"]
        );
    }

    #[test]
    fn config_errors() {
        assert!(config_flags("nu", "solve").is_err());
        assert!(config_flags("command=eval", "solve").is_err());
        assert!(config_flags("config=x", "solve").is_err());
    }

    #[test]
    fn library_errors_map_to_exit_codes() {
        assert_eq!(CliError::from(crate::Error::Domain("x".into())).exit_code(), EXIT_INPUT);
        assert_eq!(CliError::from(crate::Error::Solver("x".into())).exit_code(), EXIT_NUMERICAL);
    }
}

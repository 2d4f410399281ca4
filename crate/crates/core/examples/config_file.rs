//! Drives `solve` from a `key=value` config file, with one flag overriding
//! the file, and prints the replayable header of the result.
//!
//! cargo run --example config_file

use std::fs;

fn main() -> std::io::Result<()> {
    let dir = std::env::temp_dir().join(format!("kstruve-config-{}", std::process::id()));
    fs::create_dir_all(&dir)?;
    let config = dir.join("run.conf");
    fs::write(&config, "# thm2 problem\nforcing=thm2 a=2\nnu=0.7\nn_points=8\n")?;
    let prefix = dir.join("run");
    let code = kstruve::cli::run([
        "kstruve",
        "solve",
        "--config",
        config.to_str().unwrap(),
        "--nu",
        "0.9",
        "--output",
        prefix.to_str().unwrap(),
    ]);
    let csv = fs::read_to_string(dir.join("run.csv"))?;
    print!("exit {code}\n{csv}");
    fs::remove_dir_all(&dir)
}

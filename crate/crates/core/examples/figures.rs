//! Writes the six figure data sets (CSV + SVG) into a directory, through
//! the same entry point as the `kstruve` binary.
//!
//! cargo run --release --example figures -- [DIR]

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "figures".into());
    let prefix = format!("{}/", dir.trim_end_matches('/'));
    let code = kstruve::cli::run(["kstruve", "figures", "--output", prefix.as_str()]);
    if code == 0 {
        println!("wrote fig1..fig6 to {dir}/");
    }
    std::process::exit(code);
}

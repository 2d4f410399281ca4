fn main() {
    std::process::exit(kstruve::cli::run(std::env::args_os()));
}

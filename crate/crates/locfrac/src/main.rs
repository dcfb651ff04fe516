fn main() {
    std::process::exit(locfrac::cli::run(std::env::args_os()));
}

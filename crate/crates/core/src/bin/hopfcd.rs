fn main() {
    std::process::exit(hopfcd::cli::run(std::env::args_os()));
}

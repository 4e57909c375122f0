fn main() {
    std::process::exit(cblab::cli::run_from(std::env::args()));
}

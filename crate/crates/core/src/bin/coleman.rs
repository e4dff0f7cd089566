fn main() {
    std::process::exit(coleman::cli::run(std::env::args()));
}

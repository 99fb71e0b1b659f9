fn main() {
    std::process::exit(catalan_hankel::cli::run(std::env::args()));
}

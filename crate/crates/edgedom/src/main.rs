fn main() {
    std::process::exit(edgedom::cli::run(std::env::args_os()));
}

fn main() {
    std::process::exit(onefactor::cli::run(std::env::args()));
}

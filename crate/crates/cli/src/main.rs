fn main() {
    std::process::exit(metamour_cli::run(std::env::args()));
}

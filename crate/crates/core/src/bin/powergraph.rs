fn main() {
    std::process::exit(powergraph::cli::run());
}

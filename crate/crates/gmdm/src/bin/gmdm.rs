fn main() {
    std::process::exit(gmdm::cli::run());
}

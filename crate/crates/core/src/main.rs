fn main() {
    std::process::exit(valquiver::cli::run());
}

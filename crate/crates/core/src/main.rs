fn main() {
    std::process::exit(qident_core::cli::run());
}

fn main() {
    std::process::exit(cyclospec::cli::run());
}

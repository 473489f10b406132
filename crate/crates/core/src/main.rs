fn main() {
    std::process::exit(resolvedim::cli::main());
}

fn main() {
    std::process::exit(bhe::cli::main());
}

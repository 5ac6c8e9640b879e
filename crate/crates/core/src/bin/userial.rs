fn main() {
    std::process::exit(userial::frontend::cli::main());
}

fn main() {
    std::process::exit(bosonic::cli::main());
}

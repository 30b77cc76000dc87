fn main() {
    std::process::exit(stdpuzzle::cli::main())
}

fn main() {
    std::process::exit(twin_hanoi::cli::main());
}

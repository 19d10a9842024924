fn main() {
    std::process::exit(deltamin::cli::main_with_args(std::env::args_os()));
}

fn main() {
    std::process::exit(edgedim::cli::main_with_args(std::env::args_os()));
}

fn main() {
    std::process::exit(detsurf::cli::main_with_args(std::env::args_os()));
}

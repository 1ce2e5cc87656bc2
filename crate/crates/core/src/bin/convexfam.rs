fn main() {
    std::process::exit(convexfam::cli::main_with_args(std::env::args_os()))
}

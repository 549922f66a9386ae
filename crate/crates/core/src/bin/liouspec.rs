fn main() {
    std::process::exit(liouspec::cli::main_with_args(std::env::args_os()));
}

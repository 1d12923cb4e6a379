fn main() {
    std::process::exit(apolarkit::cli::main_with_args(std::env::args_os()));
}

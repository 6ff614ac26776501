fn main() {
    std::process::exit(cats::cli::cli_main(std::env::args_os()));
}

fn main() {
    std::process::exit(oqkit_cli::run_cli(std::env::args_os()));
}

fn main() {
    std::process::exit(netrobust::cli::run(std::env::args_os()));
}

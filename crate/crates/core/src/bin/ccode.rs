fn main() {
    std::process::exit(connected_codes::cli::run(std::env::args_os()));
}

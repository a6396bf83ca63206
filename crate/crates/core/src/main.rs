fn main() {
    std::process::exit(groupcover::cli::run(std::env::args_os()));
}

fn main() {
    std::process::exit(traag::cli::run(std::env::args_os()));
}

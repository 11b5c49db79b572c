fn main() {
    std::process::exit(coringlab::cli::run(std::env::args_os()));
}

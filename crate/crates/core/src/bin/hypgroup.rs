fn main() {
    std::process::exit(hypgroup::cli::run(std::env::args_os()));
}

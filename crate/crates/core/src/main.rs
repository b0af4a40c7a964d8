fn main() {
    std::process::exit(bricklayer::cli::run(std::env::args_os()));
}

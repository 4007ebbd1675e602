fn main() {
    std::process::exit(specrange_cli::run(std::env::args_os()));
}

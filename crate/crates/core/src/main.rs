fn main() {
    std::process::exit(janet_stanley::cli::run(std::env::args_os()).emit());
}

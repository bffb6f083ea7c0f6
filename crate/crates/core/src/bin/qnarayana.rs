fn main() {
    std::process::exit(qnarayana::cli::run(std::env::args_os()));
}

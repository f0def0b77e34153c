fn main() {
    std::process::exit(berge_cli::dispatch(std::env::args_os()));
}

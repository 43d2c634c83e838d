fn main() {
    std::process::exit(ncring::cli::dispatch(std::env::args_os()));
}

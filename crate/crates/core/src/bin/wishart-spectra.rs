fn main() {
    std::process::exit(wishart_spectra::cli::run(std::env::args_os()));
}

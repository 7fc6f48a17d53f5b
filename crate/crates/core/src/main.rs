fn main() {
    std::process::exit(order_spectra::cli::run(std::env::args_os()));
}

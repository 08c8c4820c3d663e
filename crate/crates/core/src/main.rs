fn main() -> std::process::ExitCode {
    hilbert_spectra::cli::main()
}

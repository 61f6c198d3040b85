fn main() -> std::process::ExitCode {
    gbtq::cli::main()
}

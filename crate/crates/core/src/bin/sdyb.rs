fn main() -> std::process::ExitCode {
    sdyb::cli::main()
}

use std::process::ExitCode;

fn main() -> ExitCode {
    cyclodual::cli::run()
}

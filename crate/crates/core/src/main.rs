use std::process::ExitCode;

fn main() -> ExitCode {
    toric_ci::cli::run()
}

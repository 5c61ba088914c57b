use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(agwb::cli::run(std::env::args()) as u8)
}

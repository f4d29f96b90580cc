use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(multihop_energy::cli::run(std::env::args()) as u8)
}

use std::io::Write;
use std::process::ExitCode;

use bsato::cli::{execute, Command, RawRequest};
use clap::Parser;

/// Exact Bernstein-Sato polynomials, multiplier ideals and Hodge spectra.
#[derive(Parser)]
#[command(name = "bsato", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    #[command(flatten)]
    request: RawRequest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command, &cli.request) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

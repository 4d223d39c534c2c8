use std::process::ExitCode;

use clap::Parser;
use jaskowski::cli::{run, Cli, USAGE_EXIT_CODE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match run(&cli, &mut stdout) {
        Ok(outcome) => ExitCode::from(outcome.exit_code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE_EXIT_CODE as u8)
        }
    }
}

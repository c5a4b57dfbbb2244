use std::process::ExitCode;

use clap::Parser;
use ptent::cli::{exit_code, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ptent: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}

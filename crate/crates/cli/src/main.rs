use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use toric_ech_cli::commands::{exit_code, render_error};
use toric_ech_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            ExitCode::from(outcome.exit as u8)
        }
        Err(e) => {
            eprint!("{}", render_error(&e, cli.json));
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}

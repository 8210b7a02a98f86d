use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use quandle_augment_cli::{execute, render, Cli};

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.status().code() as u8);
        }
    };
    match render(&outcome.document, cli.format) {
        Ok(s) => {
            // a closed pipe downstream is not our failure
            let _ = std::io::stdout().lock().write_all(s.as_bytes());
            ExitCode::from(outcome.status.code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status().code() as u8)
        }
    }
}

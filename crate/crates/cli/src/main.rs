mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

use args::Cli;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] klcap::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(klcap::Error::Parse(_) | klcap::Error::Config(_)) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

/// Text for stdout plus how many cross-checks failed.
pub struct Outcome {
    pub body: String,
    pub mismatches: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            let _ = writeln!(std::io::stdout(), "{}", out.body);
            if out.mismatches > 0 {
                eprintln!("error: {} mismatches", out.mismatches);
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

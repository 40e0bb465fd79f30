mod cli;
mod commands;
mod input;
mod report;

use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Format};

const THREADS_VAR: &str = "ABEL_CENTER_THREADS";

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_VAR} must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    match commands::run(&cli.command) {
        Ok(report) => {
            let text = match cli.output {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            print!("{text}");
            ExitCode::from(u8::from(report.negative))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

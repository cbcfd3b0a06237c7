use std::io::Write;
use std::process::ExitCode;

use bisolve::clock::WallClock;
use bisolve::{run, Cli, EXIT_ERROR};
use clap::Parser;

fn main() -> ExitCode {
    let clock = WallClock::new();
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli, &mut out, &clock) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}

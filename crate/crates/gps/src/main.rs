use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gps::{dispatch, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = dispatch(&cli);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}

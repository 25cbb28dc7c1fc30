use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use ltp_hodge::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = run(&cli);
    eprint!("{}", outcome.stderr);
    let written = match &cli.output {
        Some(path) if outcome.code != 2 => std::fs::write(path, &outcome.stdout),
        _ => std::io::stdout().write_all(outcome.stdout.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.code as u8)
}

use std::process::ExitCode;

use clap::Parser;
use ideal_forge_cli::{render, run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            println!("{}", serde_json::json!({ "error": e.kind().to_string() }));
            return ExitCode::from(2);
        }
    };
    let outcome = run(&cli);
    if let Some(err) = outcome.report.get("error") {
        eprintln!("error: {}", err.as_str().unwrap_or_default());
    }
    println!("{}", render(&outcome, cli.pretty));
    ExitCode::from(outcome.code as u8)
}

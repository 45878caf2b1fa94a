use std::process::ExitCode;

use clap::Parser;
use triortho_cli::args::Cli;
use triortho_cli::commands::run;
use triortho_cli::error::exit;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::PARAMETER } else { exit::PASS });
        }
    };
    ExitCode::from(run(cli.command))
}

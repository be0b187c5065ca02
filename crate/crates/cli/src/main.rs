use std::process::ExitCode;

use clap::Parser;
use reciprocity_cli::config::{Cli, RunConfig};
use reciprocity_cli::run;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = RunConfig::try_from(cli).and_then(|config| run(&config));
    match result {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

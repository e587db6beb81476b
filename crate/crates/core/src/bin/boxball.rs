use std::io;
use std::process::ExitCode;

use boxball::cli::{run, RunConfig};
use clap::Parser;

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match run(&config, &mut io::stdin().lock(), &mut io::stdout().lock()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("boxball: {e}");
            ExitCode::from(2)
        }
    }
}

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hopfcalc_cli::{run, RunConfiguration};

fn main() -> ExitCode {
    let config = RunConfiguration::parse();
    let out = run(&config);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    ExitCode::from(out.exit_code as u8)
}
